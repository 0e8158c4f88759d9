#include "claims/inequality.hpp"

#include <algorithm>

namespace claims {

namespace {

std::vector<Rational> sorted_ascending(const AwardVector& x) {
  std::vector<Rational> v = x.values;
  std::sort(v.begin(), v.end());
  return v;
}

Verdict make_verdict(std::string axiom) {
  // These verdicts quantify over the compromise family; the rule slot records
  // the family itself.
  return Verdict{std::move(axiom), RuleSpec::pcea(0)};
}

bool dominates_or_equal(const OrderingResult& r) {
  return r.relation == Ordering::StrictlyBetter || r.relation == Ordering::Equal;
}

}  // namespace

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::StrictlyBetter: return "strictly-better";
    case Ordering::Equal: return "equal";
    case Ordering::StrictlyWorse: return "strictly-worse";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

OrderingResult leximin_compare(const AwardVector& x, const AwardVector& y) {
  if (x.values.size() != y.values.size()) {
    throw DimensionMismatch("leximin comparison needs equal agent counts");
  }
  std::vector<Rational> xs = sorted_ascending(x);
  std::vector<Rational> ys = sorted_ascending(y);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] != ys[i]) {
      return OrderingResult{xs[i] > ys[i] ? Ordering::StrictlyBetter : Ordering::StrictlyWorse, i};
    }
  }
  return OrderingResult{Ordering::Equal, std::nullopt};
}

LorenzCurve lorenz_curve(const AwardVector& x) {
  std::vector<Rational> v = sorted_ascending(x);
  Rational running = 0;
  for (Rational& entry : v) {
    running += entry;
    entry = running;
  }
  return LorenzCurve{std::move(v)};
}

OrderingResult lorenz_compare(const AwardVector& x, const AwardVector& y) {
  if (x.values.size() != y.values.size()) {
    throw DimensionMismatch("Lorenz comparison needs equal agent counts");
  }
  LorenzCurve cx = lorenz_curve(x);
  LorenzCurve cy = lorenz_curve(y);
  if (cx.cumulative.back() != cy.cumulative.back()) {
    throw UnequalTotals("Lorenz comparison needs equal totals");
  }
  bool some_above = false;
  bool some_below = false;
  std::optional<std::size_t> first_diff;
  for (std::size_t i = 0; i < cx.cumulative.size(); ++i) {
    if (cx.cumulative[i] == cy.cumulative[i]) continue;
    if (!first_diff) first_diff = i;
    (cx.cumulative[i] > cy.cumulative[i] ? some_above : some_below) = true;
  }
  if (some_above && some_below) return OrderingResult{Ordering::Incomparable, first_diff};
  if (some_above) return OrderingResult{Ordering::StrictlyBetter, first_diff};
  if (some_below) return OrderingResult{Ordering::StrictlyWorse, first_diff};
  return OrderingResult{Ordering::Equal, std::nullopt};
}

bool strictness_expected(const ClaimsProblem& problem, const Rational& L,
                         const Rational& L_prime) {
  // The allocation is invariant on [L, L'] exactly when no claim lies in
  // (L, L'] and all claims above L' are equal; in every other configuration
  // either a newly pinned agent or two distinct residual claims force a
  // strict difference.
  std::vector<Rational> above;
  for (const Rational& c : problem.claims()) {
    if (c > L && c <= L_prime) return true;
    if (c > L_prime) above.push_back(c);
  }
  std::sort(above.begin(), above.end());
  return above.size() >= 2 && above.front() != above.back();
}

Verdict verify_L_monotonicity(const ClaimsProblem& problem, const std::vector<Rational>& L_grid) {
  Verdict v = make_verdict("L-monotonicity");
  Rational lambda = compute_lambda(problem).value;
  for (std::size_t i = 0; i < L_grid.size(); ++i) {
    if (L_grid[i] < 0 || L_grid[i] > lambda) {
      throw GridOutOfRange("grid value " + exact_string(L_grid[i]) + " outside [0, " +
                           exact_string(lambda) + "]");
    }
    if (i > 0 && L_grid[i] < L_grid[i - 1]) {
      throw GridOutOfRange("grid must be ascending");
    }
  }
  for (std::size_t i = 0; i + 1 < L_grid.size(); ++i) {
    const Rational& lo = L_grid[i];
    const Rational& hi = L_grid[i + 1];
    if (lo == hi) continue;
    AwardVector x_lo = allocate(RuleSpec::pcea(lo), problem);
    AwardVector x_hi = allocate(RuleSpec::pcea(hi), problem);
    OrderingResult lorenz = lorenz_compare(x_hi, x_lo);
    OrderingResult lexi = leximin_compare(x_hi, x_lo);
    bool strict = strictness_expected(problem, lo, hi);
    bool ok = dominates_or_equal(lorenz) && dominates_or_equal(lexi);
    if (ok && strict) {
      ok = lorenz.relation == Ordering::StrictlyBetter &&
           lexi.relation == Ordering::StrictlyBetter;
    }
    if (!ok) {
      v.passed = false;
      v.trials_run = static_cast<int>(i + 1);
      v.witness = Witness{problem, LPairAux{lo, hi},
                          std::string("lorenz=") + ordering_name(lorenz.relation) +
                              " leximin=" + ordering_name(lexi.relation) +
                              (strict ? " (strictness expected)" : "")};
      return v;
    }
    ++v.trials_run;
  }
  return v;
}

Verdict verify_sandwich(const ClaimsProblem& problem, const Rational& L) {
  Verdict v = make_verdict("lorenz-sandwich");
  Rational lambda = compute_lambda(problem).value;
  if (L < 0 || L > lambda) {
    throw GridOutOfRange("L outside [0, lambda]");
  }
  AwardVector cea = allocate(RuleSpec::cea(), problem);
  AwardVector prop = allocate(RuleSpec::proportional(), problem);
  AwardVector mid = allocate(RuleSpec::pcea(L), problem);
  AwardVector amin = allocate(RuleSpec::alpha_min(), problem);
  Rational smallest = *std::min_element(problem.claims().begin(), problem.claims().end());

  std::vector<const AwardVector*> chain;
  if (L <= smallest) {
    chain = {&cea, &amin, &mid, &prop};
  } else {
    chain = {&cea, &mid, &amin, &prop};
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    OrderingResult r = lorenz_compare(*chain[i], *chain[i + 1]);
    if (!dominates_or_equal(r)) {
      v.passed = false;
      v.trials_run = static_cast<int>(i + 1);
      v.witness = Witness{problem, LPairAux{L, smallest},
                          std::string("chain link ") + std::to_string(i) +
                              " is " + ordering_name(r.relation)};
      return v;
    }
    ++v.trials_run;
  }
  return v;
}

}  // namespace claims

#include "claims/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace claims {

namespace {

const Rational& rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }

bool contains_equal_awards(const RuleSpec& spec) {
  if (spec.kind() == RuleKind::EqualAwards) return true;
  if (spec.kind() == RuleKind::DualOf) return contains_equal_awards(spec.inner());
  return false;
}

std::size_t dual_depth(const RuleSpec& spec) {
  return spec.kind() == RuleKind::DualOf ? 1 + dual_depth(spec.inner()) : 0;
}

void require_positive_claims(const ClaimsProblem& problem) {
  for (const Rational& c : problem.claims()) {
    if (c <= 0) {
      throw DualRequiresPositiveClaims("dual rules require strictly positive claims");
    }
  }
}

AwardVector zero_awards(const ClaimsProblem& problem) {
  return AwardVector{std::vector<Rational>(problem.size(), Rational(0))};
}

/// Baseline-plus-proportional division at an already clamped level.
AwardVector baseline_then_proportional(const ClaimsProblem& problem, const Rational& level) {
  const std::vector<Rational>& c = problem.claims();
  std::vector<Rational> base(problem.size());
  Rational base_total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    base[i] = rmin(c[i], level);
    base_total += base[i];
  }
  Rational residual_claims = problem.total_claims() - base_total;
  if (residual_claims == 0) return AwardVector{std::move(base)};
  Rational residual_estate = problem.estate() - base_total;
  Rational share = residual_estate / residual_claims;
  for (std::size_t i = 0; i < c.size(); ++i) {
    base[i] += (c[i] - base[i]) * share;
  }
  return AwardVector{std::move(base)};
}

AwardVector dispatch(const RuleSpec& spec, const ClaimsProblem& problem);

AwardVector dual_transform(const RuleSpec& inner, const ClaimsProblem& problem) {
  require_positive_claims(problem);
  if (problem.estate() == 0) return zero_awards(problem);
  ClaimsProblem mirror = dual_problem(problem);
  AwardVector inner_awards = dispatch(inner, mirror);
  std::vector<Rational> out(problem.size());
  for (std::size_t i = 0; i < problem.size(); ++i) {
    out[i] = problem.claims()[i] - inner_awards.values[i];
  }
  return AwardVector{std::move(out)};
}

AwardVector dispatch(const RuleSpec& spec, const ClaimsProblem& problem) {
  const std::vector<Rational>& c = problem.claims();
  const Rational& e = problem.estate();
  switch (spec.kind()) {
    case RuleKind::Proportional: {
      Rational share = e / problem.total_claims();
      std::vector<Rational> out(problem.size());
      for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * share;
      return AwardVector{std::move(out)};
    }
    case RuleKind::EqualAwards: {
      Rational share = e / Rational(static_cast<unsigned>(problem.size()));
      return AwardVector{std::vector<Rational>(problem.size(), share)};
    }
    case RuleKind::CEA: {
      Rational lambda = compute_lambda(problem).value;
      std::vector<Rational> out(problem.size());
      for (std::size_t i = 0; i < c.size(); ++i) out[i] = rmin(c[i], lambda);
      return AwardVector{std::move(out)};
    }
    case RuleKind::CEL: {
      Rational mu = compute_mu(problem).value;
      std::vector<Rational> out(problem.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = c[i] > mu ? Rational(c[i] - mu) : Rational(0);
      }
      return AwardVector{std::move(out)};
    }
    case RuleKind::PCEA: {
      return baseline_then_proportional(problem, effective_L(problem, spec.param_L()));
    }
    case RuleKind::PCEADual: {
      return dual_transform(RuleSpec::pcea(spec.param_L()), problem);
    }
    case RuleKind::AlphaMin: {
      Rational smallest = *std::min_element(c.begin(), c.end());
      Rational equal_share = e / Rational(static_cast<unsigned>(problem.size()));
      if (smallest >= equal_share) {
        return AwardVector{std::vector<Rational>(problem.size(), equal_share)};
      }
      // Coincides with the compromise rule at L = c_1, but stated directly.
      return baseline_then_proportional(problem, smallest);
    }
    case RuleKind::DualOf: {
      return dual_transform(spec.inner(), problem);
    }
  }
  throw std::logic_error("unhandled rule kind");
}

}  // namespace

RuleSpec RuleSpec::pcea(Rational L) {
  if (L < 0) throw Error("pcea parameter L must be non-negative");
  RuleSpec spec(RuleKind::PCEA);
  spec.L_ = std::move(L);
  return spec;
}

RuleSpec RuleSpec::pcea_dual(Rational L) {
  if (L < 0) throw Error("pcea-dual parameter L must be non-negative");
  RuleSpec spec(RuleKind::PCEADual);
  spec.L_ = std::move(L);
  return spec;
}

RuleSpec RuleSpec::dual_of(RuleSpec inner) {
  if (dual_depth(inner) >= 2) throw Error("dual nesting deeper than two collapses; not allowed");
  RuleSpec spec(RuleKind::DualOf);
  spec.inner_ = std::make_shared<const RuleSpec>(std::move(inner));
  return spec;
}

std::string RuleSpec::name() const {
  switch (kind_) {
    case RuleKind::Proportional: return "proportional";
    case RuleKind::EqualAwards: return "equal-awards";
    case RuleKind::CEA: return "cea";
    case RuleKind::CEL: return "cel";
    case RuleKind::PCEA: return "pcea:" + exact_string(L_);
    case RuleKind::PCEADual: return "pcea-dual:" + exact_string(L_);
    case RuleKind::AlphaMin: return "alpha-min";
    case RuleKind::DualOf: return "dual:" + inner_->name();
  }
  return "?";
}

std::optional<RuleSpec> RuleSpec::parse(std::string_view text) {
  if (text == "proportional" || text == "prop" || text == "p") return proportional();
  if (text == "equal-awards" || text == "ea") return equal_awards();
  if (text == "cea") return cea();
  if (text == "cel") return cel();
  if (text == "alpha-min" || text == "alphamin") return alpha_min();
  constexpr std::string_view kPcea = "pcea:";
  constexpr std::string_view kPceaDual = "pcea-dual:";
  constexpr std::string_view kDual = "dual:";
  if (text.substr(0, kPceaDual.size()) == kPceaDual) {
    auto L = parse_number(text.substr(kPceaDual.size()));
    if (!L || *L < 0) return std::nullopt;
    return pcea_dual(*L);
  }
  if (text.substr(0, kPcea.size()) == kPcea) {
    auto L = parse_number(text.substr(kPcea.size()));
    if (!L || *L < 0) return std::nullopt;
    return pcea(*L);
  }
  if (text.substr(0, kDual.size()) == kDual) {
    auto inner = parse(text.substr(kDual.size()));
    if (!inner) return std::nullopt;
    if (dual_depth(*inner) >= 2) return std::nullopt;
    return dual_of(*inner);
  }
  return std::nullopt;
}

bool RuleSpec::operator==(const RuleSpec& other) const {
  if (kind_ != other.kind_ || L_ != other.L_) return false;
  if (kind_ == RuleKind::DualOf) return *inner_ == *other.inner_;
  return true;
}

Waterline compute_lambda(const ClaimsProblem& problem) {
  CanonicalProblem canon = canonicalize(problem);
  const std::vector<Rational>& c = canon.sorted_claims;
  std::size_t n = c.size();
  Rational prefix = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // With the k smallest claims saturated, budget balance gives the level on
    // this segment in closed form; it is valid once it stays at or below the
    // next claim. The walk always accepts by k = n-1 because e < c_N.
    Rational level = (problem.estate() - prefix) / Rational(static_cast<unsigned>(n - k));
    if (level <= c[k]) {
      return Waterline{level, k};
    }
    prefix += c[k];
  }
  throw std::logic_error("equal-awards waterline not found");
}

Waterline compute_mu(const ClaimsProblem& problem) {
  CanonicalProblem canon = canonicalize(problem);
  const std::vector<Rational>& c = canon.sorted_claims;
  std::size_t n = c.size();
  Rational suffix = problem.total_claims();
  for (std::size_t j = 0; j < n; ++j) {
    Rational level = (suffix - problem.estate()) / Rational(static_cast<unsigned>(n - j));
    if (level <= c[j]) {
      return Waterline{level, j};
    }
    suffix -= c[j];
  }
  // Unreachable: at j = n - 1 the level is c_n - e <= c_n.
  throw std::logic_error("equal-losses waterline not found");
}

Rational effective_L(const ClaimsProblem& problem, const Rational& L) {
  Rational lambda = compute_lambda(problem).value;
  return rmin(L, lambda);
}

BaselineSplit baseline_split(const ClaimsProblem& problem, const Rational& L) {
  BaselineSplit split;
  split.lambda = compute_lambda(problem).value;
  split.effective_L = rmin(L, split.lambda);
  CanonicalProblem canon = canonicalize(problem);
  split.threshold_index = 0;
  for (std::size_t s = 0; s < canon.sorted_claims.size(); ++s) {
    if (canon.sorted_claims[s] <= split.effective_L) {
      split.threshold_index = s + 1;
      split.pinned_agents.push_back(canon.perm[s]);
    }
  }
  std::sort(split.pinned_agents.begin(), split.pinned_agents.end());
  return split;
}

AwardVector allocate(const RuleSpec& spec, const ClaimsProblem& problem) {
  AwardVector awards = dispatch(spec, problem);
  if (!contains_equal_awards(spec) && !is_feasible(problem, awards)) {
    throw std::logic_error("engine produced an infeasible division for rule " + spec.name());
  }
  return awards;
}

AwardVector pcea_dual_direct(const ClaimsProblem& problem, const Rational& L) {
  require_positive_claims(problem);
  if (problem.estate() == 0) return zero_awards(problem);
  Rational clamped = effective_L(dual_problem(problem), L);
  const std::vector<Rational>& c = problem.claims();
  std::vector<Rational> residual(problem.size());
  Rational residual_total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    residual[i] = c[i] - rmin(c[i], clamped);
    residual_total += residual[i];
  }
  Rational share = problem.estate() / residual_total;
  for (Rational& r : residual) r *= share;
  return AwardVector{std::move(residual)};
}

Rational young_beta(const ClaimsProblem& problem, const Rational& L) {
  Rational lambda = compute_lambda(problem).value;
  Rational clamped = rmin(L, lambda);
  Rational base_total = 0;
  for (const Rational& c : problem.claims()) base_total += rmin(c, clamped);
  if (base_total == problem.estate()) {
    // The first piece alone exhausts the estate; its waterline is lambda.
    return lambda;
  }
  return clamped + (problem.estate() - base_total) / (problem.total_claims() - base_total);
}

AwardVector young_eval(const ClaimsProblem& problem, const Rational& L) {
  Rational clamped = effective_L(problem, L);
  Rational beta = young_beta(problem, L);
  std::vector<Rational> out(problem.size());
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const Rational& c = problem.claims()[i];
    if (beta <= clamped) {
      out[i] = rmin(c, beta);
    } else {
      Rational base = rmin(c, clamped);
      out[i] = base + (c - base) * (beta - clamped);
    }
  }
  return AwardVector{std::move(out)};
}

Rational axiom_threshold(const RuleSpec& spec, const ClaimsProblem& problem, const Rational& L) {
  if (spec.is_dual_route()) {
    if (problem.estate() == 0) return Rational(0);
    return effective_L(dual_problem(problem), L);
  }
  return effective_L(problem, L);
}

}  // namespace claims

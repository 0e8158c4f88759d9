#include "claims/paths.hpp"

#include <algorithm>

namespace claims {

namespace {

Rational min_with(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// Estate at which the equal-awards waterline reaches level t.
Rational estate_at_level(const std::vector<Rational>& claims, const Rational& t) {
  Rational e = 0;
  for (const Rational& c : claims) e += min_with(c, t);
  return e;
}

void collect_levels(const RuleSpec& rule, std::vector<Rational>& levels) {
  if (rule.has_param()) levels.push_back(rule.param_L());
  if (rule.kind() == RuleKind::DualOf) collect_levels(rule.inner(), levels);
}

/// True when the rule's path kinks are generated on the deficit axis.
bool mirrored(const RuleSpec& rule) {
  switch (rule.kind()) {
    case RuleKind::CEL:
    case RuleKind::PCEADual:
      return true;
    case RuleKind::DualOf:
      return !mirrored(rule.inner());
    default:
      return false;
  }
}

bool has_waterline_kinks(const RuleSpec& rule) {
  switch (rule.kind()) {
    case RuleKind::Proportional:
    case RuleKind::EqualAwards:
      return false;
    case RuleKind::DualOf:
      return has_waterline_kinks(rule.inner());
    default:
      return true;
  }
}

}  // namespace

std::vector<Rational> kink_estates(const RuleSpec& rule, const std::vector<Rational>& claims) {
  std::vector<Rational> estates;
  if (!has_waterline_kinks(rule)) return estates;

  std::vector<Rational> levels = claims;
  collect_levels(rule, levels);
  Rational total = sum(claims);
  for (const Rational& t : levels) {
    Rational e = estate_at_level(claims, t);
    if (mirrored(rule)) e = total - e;
    if (e > 0 && e < total) estates.push_back(e);
  }
  std::sort(estates.begin(), estates.end());
  estates.erase(std::unique(estates.begin(), estates.end()), estates.end());
  return estates;
}

PathTrace trace_path(const RuleSpec& rule, const std::vector<Rational>& claims,
                     std::size_t grid_points) {
  Rational total = sum(claims);
  std::vector<Rational> grid;
  grid.push_back(Rational(0));
  for (std::size_t i = 1; i <= grid_points; ++i) {
    grid.push_back(total * Rational(static_cast<unsigned>(i)) /
                   Rational(static_cast<unsigned>(grid_points + 1)));
  }
  std::vector<Rational> kinks = kink_estates(rule, claims);
  grid.insert(grid.end(), kinks.begin(), kinks.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  PathTrace trace{rule, claims, {}};
  trace.samples.reserve(grid.size());
  for (const Rational& e : grid) {
    ClaimsProblem p(claims, e);
    AwardVector x = allocate(rule, p);
    trace.samples.push_back(PathSample{e, std::move(x.values)});
  }
  return trace;
}

std::vector<PathTrace> trace_tree(const Rational& L,
                                  const std::vector<std::vector<Rational>>& claim_vectors,
                                  std::size_t grid_points) {
  std::vector<PathTrace> traces;
  traces.reserve(claim_vectors.size());
  for (const std::vector<Rational>& claims : claim_vectors) {
    traces.push_back(trace_path(RuleSpec::pcea(L), claims, grid_points));
  }
  return traces;
}

Verdict verify_path_nesting(const RuleSpec& rule, const std::vector<Rational>& claims,
                            const std::vector<std::pair<Rational, Rational>>& estate_pairs) {
  Verdict v{"path-nesting", rule};
  for (const auto& [e, e_prime] : estate_pairs) {
    ClaimsProblem p(claims, e);
    AwardVector first = allocate(rule, p);
    AwardVector direct = allocate(rule, ClaimsProblem(claims, e_prime));
    AwardVector staged = e_prime == e
                             ? first
                             : allocate(rule, ClaimsProblem(first.values, e_prime));
    ++v.trials_run;
    if (direct != staged) {
      v.passed = false;
      v.witness = Witness{p, SecondEstateAux{e_prime}, "two-stage path differs from direct path"};
      return v;
    }
  }
  return v;
}

}  // namespace claims

#include "claims/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace claims {

namespace {

// ---------------------------------------------------------------------------
// Deterministic per-trial randomness
// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// One independent stream per (seed, trial); trials are replayable in any
/// order because no state crosses trial boundaries.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream)
      : engine_(splitmix64(seed ^ splitmix64(stream))) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  /// Uniform rational in (0, 1) with denominator at most den_max.
  Rational fraction(int den_max) {
    int den = uniform(2, den_max);
    int num = uniform(1, den - 1);
    return Rational(num, den);
  }

  Rational claim(const GenConfig& cfg) {
    int num = uniform(cfg.allow_zero_claims ? 0 : 1, cfg.claim_num_max);
    int den = uniform(1, cfg.claim_den_max);
    return Rational(num, den);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

ClaimsProblem gen_problem(TrialRng& rng, const GenConfig& cfg, int min_agents = 1) {
  int n = rng.uniform(min_agents, std::max(min_agents, cfg.max_agents));
  std::vector<Rational> claims;
  claims.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) claims.push_back(rng.claim(cfg));
  Rational total = sum(claims);
  if (total == 0) {
    claims[0] = 1;
    total = 1;
  }
  Rational estate = total * rng.fraction(64);
  return ClaimsProblem(std::move(claims), std::move(estate));
}

/// Non-empty subset of {0..n-1} with size in [min_size, max_size], ascending.
std::vector<std::size_t> gen_subset(TrialRng& rng, std::size_t n, std::size_t min_size,
                                    std::size_t max_size) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  rng.shuffle(all);
  std::size_t size = static_cast<std::size_t>(
      rng.uniform(static_cast<int>(min_size), static_cast<int>(max_size)));
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::size_t> gen_permutation(TrialRng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);
  return perm;
}

/// Admissible reallocation among `members`: keeps every claim at or above
/// `floor_value` and preserves the member total exactly. Mixes gentle
/// exchangeable transfers with the extreme shape that parks everyone at the
/// floor and hands one member the rest, which is where waterline rules break.
std::vector<Rational> reallocate_claims(TrialRng& rng, const std::vector<Rational>& claims,
                                        const std::vector<std::size_t>& members,
                                        const Rational& floor_value) {
  std::vector<Rational> values;
  values.reserve(members.size());
  for (std::size_t idx : members) values.push_back(claims[idx]);

  if (rng.uniform(0, 3) == 0) {
    Rational total = 0;
    for (const Rational& v : values) total += v;
    std::size_t absorber =
        static_cast<std::size_t>(rng.uniform(0, static_cast<int>(values.size()) - 1));
    for (Rational& v : values) v = floor_value;
    values[absorber] =
        total - floor_value * Rational(static_cast<unsigned>(values.size() - 1));
    return values;
  }

  int rounds = rng.uniform(1, 4);
  for (int r = 0; r < rounds; ++r) {
    std::size_t a = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(values.size()) - 1));
    std::size_t b = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(values.size()) - 1));
    if (a == b) continue;
    Rational margin = values[a] - floor_value;
    if (margin <= 0) continue;
    // Occasionally move the whole margin so the floor boundary is exercised.
    Rational t = rng.uniform(0, 3) == 0 ? margin : Rational(margin * rng.fraction(8));
    values[a] -= t;
    values[b] += t;
  }
  return values;
}

ClaimsProblem with_claims(const ClaimsProblem& p, std::vector<Rational> claims) {
  return ClaimsProblem(std::move(claims), p.estate());
}

ClaimsProblem apply_reallocation(const ClaimsProblem& p, const std::vector<std::size_t>& members,
                                 const std::vector<Rational>& values) {
  std::vector<Rational> claims = p.claims();
  for (std::size_t i = 0; i < members.size(); ++i) claims[members[i]] = values[i];
  return with_claims(p, std::move(claims));
}

std::size_t smallest_claimant(const ClaimsProblem& p) {
  return static_cast<std::size_t>(
      std::min_element(p.claims().begin(), p.claims().end()) - p.claims().begin());
}

template <typename F>
std::optional<std::string> guarded(F&& f) {
  try {
    return f();
  } catch (const Error& err) {
    return std::string("engine error: ") + err.what();
  }
}

template <typename F>
Verdict run_checker(const char* axiom, const RuleSpec& rule, const GenConfig& cfg, F&& trial) {
  Verdict v{axiom, rule};
  v.seed = cfg.seed;
  for (int t = 0; t < cfg.trials; ++t) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
    std::optional<Witness> w = trial(rng, t);
    ++v.trials_run;
    if (w) {
      v.passed = false;
      v.witness = std::move(w);
      break;
    }
  }
  return v;
}

std::string join_awards(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += exact_string(values[i]);
  }
  out += "]";
  return out;
}

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string out = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  out += "]";
  return out;
}

/// Continuity schedule bound. Recorded from suite runs: the worst observed
/// sup-norm award change along a sampled perturbation ray was 1.5 * n * delta
/// across all engines; 64 leaves a wide margin while still failing fast for
/// any genuinely discontinuous map.
const Rational kContinuityBound = 64;

}  // namespace

// ---------------------------------------------------------------------------
// Single-instance predicates
// ---------------------------------------------------------------------------

std::optional<std::string> feasibility_violation(const RuleSpec& rule, const ClaimsProblem& p) {
  AwardVector x = allocate(rule, p);
  if (x.values.size() != p.size()) return "award count differs from agent count";
  Rational total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x.values[i] < 0) {
      return "agent " + std::to_string(i) + " gets negative award " + exact_string(x.values[i]);
    }
    if (x.values[i] > p.claims()[i]) {
      return "agent " + std::to_string(i) + " gets " + exact_string(x.values[i]) +
             " above claim " + exact_string(p.claims()[i]);
    }
    total += x.values[i];
  }
  if (total != p.estate()) {
    return "awards sum to " + exact_string(total) + ", estate is " + exact_string(p.estate());
  }
  return std::nullopt;
}

std::optional<std::string> equal_treatment_violation(const RuleSpec& rule,
                                                     const ClaimsProblem& p) {
  AwardVector x = allocate(rule, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.claims()[i] == p.claims()[j] && x.values[i] != x.values[j]) {
        return "agents " + std::to_string(i) + "," + std::to_string(j) +
               " share claim " + exact_string(p.claims()[i]) + " but get " +
               exact_string(x.values[i]) + " vs " + exact_string(x.values[j]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> order_preservation_violation(const RuleSpec& rule,
                                                        const ClaimsProblem& p) {
  AwardVector x = allocate(rule, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.claims()[i] < p.claims()[j]) continue;
      if (x.values[i] < x.values[j]) {
        return "awards disordered at agents " + std::to_string(i) + "," + std::to_string(j);
      }
      if (p.claims()[i] - x.values[i] < p.claims()[j] - x.values[j]) {
        return "losses disordered at agents " + std::to_string(i) + "," + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> resource_monotonicity_violation(const RuleSpec& rule,
                                                           const ClaimsProblem& p,
                                                           const Rational& second_estate) {
  const ClaimsProblem* lo = &p;
  ClaimsProblem other(p.claims(), second_estate);
  const ClaimsProblem* hi = &other;
  if (hi->estate() < lo->estate()) std::swap(lo, hi);
  AwardVector x_lo = allocate(rule, *lo);
  AwardVector x_hi = allocate(rule, *hi);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x_hi.values[i] < x_lo.values[i]) {
      return "agent " + std::to_string(i) + " drops from " + exact_string(x_lo.values[i]) +
             " to " + exact_string(x_hi.values[i]) + " as the estate grows";
    }
  }
  return std::nullopt;
}

std::optional<std::string> anonymity_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                               const std::vector<std::size_t>& perm) {
  AwardVector x = allocate(rule, p);
  std::vector<Rational> permuted(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) permuted[perm[i]] = p.claims()[i];
  AwardVector y = allocate(rule, with_claims(p, std::move(permuted)));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (y.values[perm[i]] != x.values[i]) {
      return "award of agent " + std::to_string(i) + " changes under relabeling";
    }
  }
  return std::nullopt;
}

std::optional<std::string> consistency_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                                 const std::vector<std::size_t>& subset) {
  AwardVector x = allocate(rule, p);
  Restriction reduced = restrict(p, x, subset);
  if (std::holds_alternative<FullAwardCase>(reduced)) {
    // Equality case: feasibility already pins every subset award to the claim.
    return std::nullopt;
  }
  AwardVector y = allocate(rule, std::get<ClaimsProblem>(reduced));
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (y.values[s] != x.values[subset[s]]) {
      return "reduced problem awards " + join_awards(y.values) + " but the restriction gives " +
             exact_string(x.values[subset[s]]) + " at agent " + std::to_string(subset[s]);
    }
  }
  return std::nullopt;
}

std::optional<std::string> converse_consistency_violation(const RuleSpec& rule,
                                                          const ClaimsProblem& p,
                                                          const std::vector<Rational>& candidate) {
  if (p.size() < 3) return std::nullopt;
  AwardVector x = allocate(rule, p);
  AwardVector y{candidate};
  if (y == x) return std::nullopt;
  if (!is_feasible(p, y)) return std::nullopt;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Rational pair_estate = y.values[i] + y.values[j];
      Rational pair_total = p.claims()[i] + p.claims()[j];
      if (pair_total == pair_estate) {
        if (y.values[i] != p.claims()[i] || y.values[j] != p.claims()[j]) return std::nullopt;
        continue;
      }
      ClaimsProblem pair({p.claims()[i], p.claims()[j]}, pair_estate);
      AwardVector z = allocate(rule, pair);
      if (z.values[0] != y.values[i] || z.values[1] != y.values[j]) return std::nullopt;
    }
  }
  return "feasible division " + join_awards(candidate) +
         " agrees with the rule on every two-agent subproblem but differs from " +
         join_awards(x.values);
}

std::optional<std::string> composition_down_violation(const RuleSpec& rule,
                                                      const ClaimsProblem& p,
                                                      const Rational& reduced_estate) {
  AwardVector x = allocate(rule, p);
  AwardVector direct = allocate(rule, ClaimsProblem(p.claims(), reduced_estate));
  AwardVector staged = reduced_estate == p.estate()
                           ? x
                           : allocate(rule, ClaimsProblem(x.values, reduced_estate));
  if (direct != staged) {
    return "direct division " + join_awards(direct.values) + " differs from two-stage " +
           join_awards(staged.values);
  }
  return std::nullopt;
}

std::optional<std::string> composition_up_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                                    const Rational& larger_estate) {
  AwardVector x = allocate(rule, p);
  AwardVector direct = allocate(rule, ClaimsProblem(p.claims(), larger_estate));
  if (larger_estate == p.estate()) {
    return direct == x ? std::nullopt
                       : std::optional<std::string>("rule is not single-valued in the estate");
  }
  std::vector<Rational> residual(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) residual[i] = p.claims()[i] - x.values[i];
  AwardVector extra = allocate(rule, ClaimsProblem(residual, larger_estate - p.estate()));
  std::vector<Rational> staged(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) staged[i] = x.values[i] + extra.values[i];
  if (direct.values != staged) {
    return "direct division " + join_awards(direct.values) + " differs from staged " +
           join_awards(staged);
  }
  return std::nullopt;
}

std::pair<Rational, Rational> nar_coalition_sums(const RuleSpec& rule, const ClaimsProblem& p,
                                                 const std::vector<std::size_t>& coalition,
                                                 const std::vector<Rational>& reallocated) {
  AwardVector before = allocate(rule, p);
  AwardVector after = allocate(rule, apply_reallocation(p, coalition, reallocated));
  Rational sum_before = 0;
  Rational sum_after = 0;
  for (std::size_t idx : coalition) {
    sum_before += before.values[idx];
    sum_after += after.values[idx];
  }
  return {sum_before, sum_after};
}

std::optional<std::string> nar_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                         const std::vector<std::size_t>& coalition,
                                         const std::vector<Rational>& reallocated,
                                         const Rational& L) {
  Rational thr = axiom_threshold(rule, p, L);
  Rational coalition_claims = 0;
  Rational reallocated_total = 0;
  for (std::size_t i = 0; i < coalition.size(); ++i) {
    if (p.claims()[coalition[i]] <= thr) return std::nullopt;  // not an admissible coalition
    if (reallocated[i] < thr) return std::nullopt;             // floor violated: inadmissible
    coalition_claims += p.claims()[coalition[i]];
    reallocated_total += reallocated[i];
  }
  if (coalition_claims != reallocated_total) return std::nullopt;
  auto [before, after] = nar_coalition_sums(rule, p, coalition, reallocated);
  if (before != after) {
    return "coalition total moves from " + exact_string(before) + " to " + exact_string(after);
  }
  return std::nullopt;
}

std::optional<std::string> slba_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                          const Rational& L) {
  Rational thr = axiom_threshold(rule, p, L);
  AwardVector x = allocate(rule, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational bound = p.claims()[i] < thr ? p.claims()[i] : thr;
    if (x.values[i] < bound) {
      return "agent " + std::to_string(i) + " gets " + exact_string(x.values[i]) +
             " below the floor " + exact_string(bound);
    }
  }
  return std::nullopt;
}

std::optional<std::string> pinned_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                            const Rational& L) {
  Rational thr = axiom_threshold(rule, p, L);
  AwardVector x = allocate(rule, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.claims()[i] <= thr && x.values[i] != p.claims()[i]) {
      return "agent " + std::to_string(i) + " with claim at or below the threshold gets " +
             exact_string(x.values[i]) + " instead of the claim";
    }
  }
  return std::nullopt;
}

std::optional<std::string> subl_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                          const Rational& L) {
  // The loss bound reads its threshold on the deficit side: L clamped by the
  // dual problem's waterline.
  Rational thr = p.estate() == 0 ? Rational(0) : effective_L(dual_problem(p), L);
  AwardVector x = allocate(rule, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational loss = p.claims()[i] - x.values[i];
    Rational floor = p.claims()[i] < thr ? p.claims()[i] : thr;
    if (loss < floor) {
      return "agent " + std::to_string(i) + " loses only " + exact_string(loss) +
             ", below the sustainable loss floor " + exact_string(floor);
    }
  }
  return std::nullopt;
}

std::optional<std::string> young_representation_violation(const ClaimsProblem& p,
                                                          const RuleSpec& rule,
                                                          const Rational& L_candidate) {
  AwardVector via_f = young_eval(p, L_candidate);
  AwardVector direct = allocate(rule, p);
  if (via_f != direct) {
    return "parametric evaluation at L = " + exact_string(L_candidate) + " gives " +
           join_awards(via_f.values) + ", the rule gives " + join_awards(direct.values);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

Verdict check_feasibility(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("feasibility", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    if (auto d = guarded([&] { return feasibility_violation(rule, p); })) {
      return Witness{p, std::monostate{}, *d};
    }
    return std::nullopt;
  });
}

Verdict check_equal_treatment(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("equal-treatment", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem base = gen_problem(rng, cfg, 2);
    // Plant a duplicate claim so the condition never holds vacuously.
    std::vector<Rational> claims = base.claims();
    std::size_t from = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(claims.size()) - 1));
    std::size_t to = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(claims.size()) - 1));
    if (to == from) to = (to + 1) % claims.size();
    claims[to] = claims[from];
    Rational total = sum(claims);
    if (total == 0) return std::nullopt;
    ClaimsProblem p(claims, total * rng.fraction(64));
    if (auto d = guarded([&] { return equal_treatment_violation(rule, p); })) {
      return Witness{p, std::monostate{}, *d};
    }
    return std::nullopt;
  });
}

Verdict check_order_preservation(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("order-preservation", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    if (auto d = guarded([&] { return order_preservation_violation(rule, p); })) {
      return Witness{p, std::monostate{}, *d};
    }
    return std::nullopt;
  });
}

Verdict check_resource_monotonicity(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("resource-monotonicity", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    for (int k = 0; k < cfg.inner_trials; ++k) {
      Rational e2 = p.total_claims() * rng.fraction(64);
      if (auto d = guarded([&] { return resource_monotonicity_violation(rule, p, e2); })) {
        return Witness{p, SecondEstateAux{e2}, *d};
      }
    }
    return std::nullopt;
  });
}

Verdict check_anonymity(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("anonymity", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    std::vector<std::size_t> perm = gen_permutation(rng, p.size());
    if (auto d = guarded([&] { return anonymity_violation(rule, p, perm); })) {
      return Witness{p, PermutationAux{perm}, *d};
    }
    return std::nullopt;
  });
}

Verdict check_consistency(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("consistency", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    for (int k = 0; k < cfg.inner_trials; ++k) {
      std::vector<std::size_t> subset = gen_subset(rng, p.size(), 1, p.size() - 1);
      if (auto d = guarded([&] { return consistency_violation(rule, p, subset); })) {
        return Witness{p, SubsetAux{subset}, *d};
      }
    }
    return std::nullopt;
  });
}

Verdict check_consistency1(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("consistency-1", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 3);
    std::size_t anchor = smallest_claimant(p);
    for (int k = 0; k < cfg.inner_trials; ++k) {
      std::vector<std::size_t> subset = gen_subset(rng, p.size(), 1, p.size() - 1);
      if (std::find(subset.begin(), subset.end(), anchor) == subset.end()) {
        if (subset.size() == p.size() - 1) continue;
        subset.push_back(anchor);
        std::sort(subset.begin(), subset.end());
      }
      if (auto d = guarded([&] { return consistency_violation(rule, p, subset); })) {
        return Witness{p, SubsetAux{subset}, *d};
      }
    }
    return std::nullopt;
  });
}

Verdict check_converse_consistency(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("converse-consistency", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    // Two-agent problems have no proper pairs, so those trials are vacuous.
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    AwardVector x = allocate(rule, p);

    // Candidate divisions: the other benchmark engines, then random
    // budget-preserving pair transfers away from x.
    std::vector<std::vector<Rational>> candidates;
    for (const RuleSpec& other : {RuleSpec::proportional(), RuleSpec::cea(), RuleSpec::cel(),
                                  RuleSpec::alpha_min()}) {
      if (other == rule) continue;
      candidates.push_back(allocate(other, p).values);
    }
    for (int k = 0; k < cfg.inner_trials; ++k) {
      std::vector<Rational> y = x.values;
      std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(p.size()) - 1));
      std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(p.size()) - 1));
      if (i == j) continue;
      Rational headroom = p.claims()[i] - y[i];
      Rational t = headroom < y[j] ? headroom : y[j];
      if (t <= 0) continue;
      t *= rng.fraction(8);
      y[i] += t;
      y[j] -= t;
      candidates.push_back(std::move(y));
    }

    for (const std::vector<Rational>& y : candidates) {
      if (auto d = guarded([&] { return converse_consistency_violation(rule, p, y); })) {
        return Witness{p, CoalitionAux{{}, y}, *d};
      }
    }
    return std::nullopt;
  });
}

Verdict check_composition_down(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("composition-down", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    for (int k = 0; k < cfg.inner_trials; ++k) {
      Rational e_prime = p.estate() * rng.fraction(32);
      if (auto d = guarded([&] { return composition_down_violation(rule, p, e_prime); })) {
        return Witness{p, SecondEstateAux{e_prime}, *d};
      }
    }
    return std::nullopt;
  });
}

Verdict check_composition_up(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("composition-up", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    for (int k = 0; k < cfg.inner_trials; ++k) {
      Rational gap = p.total_claims() - p.estate();
      Rational e_double = p.estate() + gap * rng.fraction(32);
      if (auto d = guarded([&] { return composition_up_violation(rule, p, e_double); })) {
        return Witness{p, SecondEstateAux{e_double}, *d};
      }
    }
    return std::nullopt;
  });
}

Verdict check_continuity_sampled(const RuleSpec& rule, const GenConfig& cfg) {
  return run_checker("continuity", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    AwardVector x = allocate(rule, p);
    // A fixed perturbation direction for claims and estate; the ray is then
    // probed at delta = 2^-k for k = 1..20.
    std::vector<Rational> dir(p.size());
    for (Rational& d : dir) d = Rational(rng.uniform(-2, 2), rng.uniform(1, 3));
    Rational dir_e(rng.uniform(-2, 2), rng.uniform(1, 3));

    Rational n_times_bound = Rational(static_cast<unsigned>(p.size())) * kContinuityBound;
    Rational delta(1, 2);
    for (int k = 1; k <= 20; ++k, delta /= 2) {
      std::vector<Rational> claims(p.size());
      bool valid = true;
      Rational total = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        claims[i] = p.claims()[i] + delta * dir[i];
        if (claims[i] < 0) valid = false;
        total += claims[i];
      }
      Rational estate = p.estate() + delta * dir_e;
      if (estate < 0 || total <= estate) valid = false;
      if (!valid) continue;
      ClaimsProblem q(claims, estate);
      AwardVector y;
      try {
        y = allocate(rule, q);
      } catch (const Error&) {
        // The ray left the rule's domain (a perturbed claim hit zero for a
        // dual-route rule); that probe says nothing about continuity.
        continue;
      }
      Rational change = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        Rational diff = y.values[i] - x.values[i];
        if (diff < 0) diff = -diff;
        if (diff > change) change = diff;
      }
      if (change > n_times_bound * delta) {
        return Witness{p, PerturbedProblemAux{q},
                       "award change " + exact_string(change) +
                           " exceeds the schedule at delta = " + exact_string(delta),
                       delta};
      }
    }
    return std::nullopt;
  });
}

Verdict check_young_representation(const RuleSpec& rule, const GenConfig& cfg) {
  if (rule.kind() == RuleKind::AlphaMin) {
    // No fixed parameter can reproduce a baseline that tracks the smallest
    // claim: exhibit two problems whose endogenous baselines disagree.
    return run_checker("young-representation", rule, cfg,
                       [&](TrialRng& rng, int) -> std::optional<Witness> {
      ClaimsProblem first = gen_problem(rng, cfg, 2);
      ClaimsProblem second = gen_problem(rng, cfg, 2);
      Rational L_first = first.claims()[smallest_claimant(first)];
      if (auto d = guarded([&] { return young_representation_violation(second, rule, L_first); })) {
        return Witness{second, LPairAux{L_first, second.claims()[smallest_claimant(second)]}, *d,
                       L_first};
      }
      return std::nullopt;
    });
  }

  return run_checker("young-representation", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    Rational L_candidate;
    switch (rule.kind()) {
      case RuleKind::Proportional: L_candidate = 0; break;
      case RuleKind::CEA: L_candidate = 1000000000; break;
      case RuleKind::PCEA: L_candidate = rule.param_L(); break;
      default:
        return Witness{p, std::monostate{}, "rule has no parametric representation here"};
    }
    if (auto d = guarded([&] { return young_representation_violation(p, rule, L_candidate); })) {
      return Witness{p, LPairAux{L_candidate, L_candidate}, *d, L_candidate};
    }
    return std::nullopt;
  });
}

Verdict check_nar(const RuleSpec& rule, const GenConfig& cfg, const Rational& L) {
  Verdict v = run_checker("nar", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    Rational thr = axiom_threshold(rule, p, L);
    std::vector<std::size_t> above;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.claims()[i] > thr) above.push_back(i);
    }
    if (above.size() < 2) return std::nullopt;

    AwardVector base;
    try {
      base = allocate(rule, p);
    } catch (const Error& err) {
      return Witness{p, std::monostate{}, std::string("engine error: ") + err.what(), L};
    }

    for (int k = 0; k < cfg.inner_trials; ++k) {
      rng.shuffle(above);
      // A coalition covering everyone above the threshold has its total
      // pinned by budget balance, so favor proper sub-coalitions, where the
      // axiom actually bites.
      int max_size = static_cast<int>(above.size());
      if (above.size() >= 3 && rng.uniform(0, 3) != 0) --max_size;
      std::size_t size = static_cast<std::size_t>(rng.uniform(2, max_size));
      std::vector<std::size_t> coalition(above.begin(), above.begin() + size);
      std::sort(coalition.begin(), coalition.end());
      std::vector<Rational> values = reallocate_claims(rng, p.claims(), coalition, thr);
      // The generated reallocation is admissible by construction, so the
      // unperturbed division can be reused across the inner draws. The full
      // predicate reruns only to confirm and describe a violation.
      auto d = guarded([&]() -> std::optional<std::string> {
        AwardVector after = allocate(rule, apply_reallocation(p, coalition, values));
        Rational sum_before = 0;
        Rational sum_after = 0;
        for (std::size_t i = 0; i < coalition.size(); ++i) {
          sum_before += base.values[coalition[i]];
          sum_after += after.values[coalition[i]];
        }
        if (sum_before != sum_after) return nar_violation(rule, p, coalition, values, L);
        return std::nullopt;
      });
      if (d) {
        return Witness{p, CoalitionAux{coalition, values}, *d, L};
      }
    }
    return std::nullopt;
  });
  return v;
}

Verdict check_slba(const RuleSpec& rule, const GenConfig& cfg, const Rational& L) {
  return run_checker("slba", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    if (auto d = guarded([&] { return slba_violation(rule, p, L); })) {
      return Witness{p, std::monostate{}, *d, L};
    }
    return std::nullopt;
  });
}

Verdict check_pinned(const RuleSpec& rule, const GenConfig& cfg, const Rational& L) {
  return run_checker("pinned", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    if (auto d = guarded([&] { return pinned_violation(rule, p, L); })) {
      return Witness{p, std::monostate{}, *d, L};
    }
    return std::nullopt;
  });
}

Verdict check_subl(const RuleSpec& rule, const GenConfig& cfg, const Rational& L) {
  return run_checker("subl", rule, cfg, [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    if (auto d = guarded([&] { return subl_violation(rule, p, L); })) {
      return Witness{p, std::monostate{}, *d, L};
    }
    return std::nullopt;
  });
}

Verdict check_decentralizability(const RuleSpec& rule, const GenConfig& cfg, const Rational& L) {
  return run_checker("decentralizability", rule, cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 3);
    Rational thr = axiom_threshold(rule, p, L);
    for (int k = 0; k < cfg.inner_trials; ++k) {
      std::vector<std::size_t> group = gen_subset(rng, p.size(), 1, p.size() - 1);
      std::vector<bool> in_group(p.size(), false);
      for (std::size_t idx : group) in_group[idx] = true;
      std::vector<std::size_t> inside, outside;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.claims()[i] <= thr) continue;
        (in_group[i] ? inside : outside).push_back(i);
      }
      std::vector<Rational> claims = p.claims();
      for (const std::vector<std::size_t>& part : {inside, outside}) {
        if (part.size() < 2) continue;
        std::vector<Rational> values = reallocate_claims(rng, claims, part, thr);
        for (std::size_t i = 0; i < part.size(); ++i) claims[part[i]] = values[i];
      }
      if (claims == p.claims()) continue;
      ClaimsProblem q = with_claims(p, claims);
      auto d = guarded([&]() -> std::optional<std::string> {
        AwardVector before = allocate(rule, p);
        AwardVector after = allocate(rule, q);
        Rational sum_before = 0;
        Rational sum_after = 0;
        for (std::size_t idx : group) {
          sum_before += before.values[idx];
          sum_after += after.values[idx];
        }
        if (sum_before != sum_after) {
          return "group total moves from " + exact_string(sum_before) + " to " +
                 exact_string(sum_after);
        }
        return std::nullopt;
      });
      if (d) {
        return Witness{p, CoalitionAux{group, claims}, *d, L};
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

std::vector<Verdict> theorem1_oracle(const GenConfig& cfg, const Rational& L) {
  std::vector<Verdict> verdicts;
  verdicts.push_back(check_nar(RuleSpec::pcea(L), cfg, L));
  verdicts.push_back(check_slba(RuleSpec::pcea(L), cfg, L));
  verdicts.push_back(check_slba(RuleSpec::proportional(), cfg, L));
  verdicts.push_back(check_nar(RuleSpec::cea(), cfg, L));
  return verdicts;
}

std::vector<Verdict> theorem2_oracle(const GenConfig& cfg, const Rational& L) {
  std::vector<Verdict> verdicts;
  verdicts.push_back(check_nar(RuleSpec::pcea_dual(L), cfg, L));
  verdicts.push_back(check_subl(RuleSpec::pcea_dual(L), cfg, L));

  RuleSpec twice = RuleSpec::dual_of(RuleSpec::dual_of(RuleSpec::pcea(L)));
  verdicts.push_back(run_checker("dual-involution", twice, cfg,
                                 [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    auto d = guarded([&]() -> std::optional<std::string> {
      if (allocate(twice, p) != allocate(RuleSpec::pcea(L), p)) {
        return std::string("double dual differs from the rule");
      }
      return std::nullopt;
    });
    if (d) return Witness{p, std::monostate{}, *d, L};
    return std::nullopt;
  }));

  verdicts.push_back(run_checker("dual-identity", RuleSpec::pcea_dual(L), cfg,
                                 [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    auto d = guarded([&]() -> std::optional<std::string> {
      if (allocate(RuleSpec::pcea_dual(L), p) != pcea_dual_direct(p, L)) {
        return std::string("transform route and residual-proportional route disagree");
      }
      return std::nullopt;
    });
    if (d) return Witness{p, std::monostate{}, *d, L};
    return std::nullopt;
  }));

  verdicts.push_back(run_checker("self-dual-proportional",
                                 RuleSpec::dual_of(RuleSpec::proportional()), cfg,
                                 [&](TrialRng& rng, int) -> std::optional<Witness> {
    ClaimsProblem p = gen_problem(rng, cfg, 2);
    auto d = guarded([&]() -> std::optional<std::string> {
      if (allocate(RuleSpec::dual_of(RuleSpec::proportional()), p) !=
          allocate(RuleSpec::proportional(), p)) {
        return std::string("proportional is not self-dual on this instance");
      }
      return std::nullopt;
    });
    if (d) return Witness{p, std::monostate{}, *d};
    return std::nullopt;
  }));

  return verdicts;
}

Verdict check_alpha_min_characterization(const GenConfig& cfg) {
  return run_checker("alpha-min-characterization", RuleSpec::alpha_min(), cfg,
                     [&](TrialRng& rng, int) -> std::optional<Witness> {
    for (int attempt = 0; attempt < 50; ++attempt) {
      ClaimsProblem p = gen_problem(rng, cfg, 2);
      Rational smallest = p.claims()[smallest_claimant(p)];
      Rational equal_share = p.estate() / Rational(static_cast<unsigned>(p.size()));
      if (smallest >= equal_share) continue;

      if (auto d = guarded([&] { return slba_violation(RuleSpec::alpha_min(), p, smallest); })) {
        return Witness{p, std::monostate{}, *d, smallest};
      }
      std::vector<std::size_t> above;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.claims()[i] > smallest) above.push_back(i);
      }
      if (above.size() < 2) return std::nullopt;
      for (int k = 0; k < cfg.inner_trials; ++k) {
        rng.shuffle(above);
        std::size_t size = static_cast<std::size_t>(rng.uniform(2, static_cast<int>(above.size())));
        std::vector<std::size_t> coalition(above.begin(), above.begin() + size);
        std::sort(coalition.begin(), coalition.end());
        std::vector<Rational> values = reallocate_claims(rng, p.claims(), coalition, smallest);
        if (auto d = guarded(
                [&] { return nar_violation(RuleSpec::alpha_min(), p, coalition, values, smallest); })) {
          return Witness{p, CoalitionAux{coalition, values}, *d, smallest};
        }
      }
      return std::nullopt;
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Battery and catalog expectations
// ---------------------------------------------------------------------------

const char* property_name(CatalogProperty p) {
  switch (p) {
    case CatalogProperty::EqualTreatment: return "equal-treatment";
    case CatalogProperty::OrderPreservation: return "order-preservation";
    case CatalogProperty::ResourceMonotonicity: return "resource-monotonicity";
    case CatalogProperty::Anonymity: return "anonymity";
    case CatalogProperty::Consistency: return "consistency";
    case CatalogProperty::ConverseConsistency: return "converse-consistency";
    case CatalogProperty::CompositionDown: return "composition-down";
    case CatalogProperty::CompositionUp: return "composition-up";
    case CatalogProperty::YoungRepresentation: return "young-representation";
  }
  return "?";
}

std::vector<Verdict> run_battery(const RuleSpec& rule, const GenConfig& cfg,
                                 const std::optional<Rational>& L) {
  std::vector<Verdict> out;
  out.push_back(check_feasibility(rule, cfg));
  if (rule.kind() == RuleKind::EqualAwards) {
    // Equal awards is not claim-bounded; the remaining checks presuppose a
    // feasible rule.
    return out;
  }
  out.push_back(check_equal_treatment(rule, cfg));
  out.push_back(check_order_preservation(rule, cfg));
  out.push_back(check_resource_monotonicity(rule, cfg));
  out.push_back(check_anonymity(rule, cfg));
  out.push_back(check_consistency(rule, cfg));
  out.push_back(check_consistency1(rule, cfg));
  out.push_back(check_converse_consistency(rule, cfg));
  out.push_back(check_composition_down(rule, cfg));
  out.push_back(check_composition_up(rule, cfg));
  out.push_back(check_continuity_sampled(rule, cfg));
  switch (rule.kind()) {
    case RuleKind::Proportional:
    case RuleKind::CEA:
    case RuleKind::PCEA:
    case RuleKind::AlphaMin:
      out.push_back(check_young_representation(rule, cfg));
      break;
    default:
      break;
  }
  if (L) {
    out.push_back(check_nar(rule, cfg, *L));
    out.push_back(check_slba(rule, cfg, *L));
    out.push_back(check_pinned(rule, cfg, *L));
    out.push_back(check_subl(rule, cfg, *L));
    out.push_back(check_decentralizability(rule, cfg, *L));
  }
  return out;
}

std::optional<std::vector<std::pair<CatalogProperty, bool>>> catalog_expectations(
    const RuleSpec& rule) {
  bool consistent = true;
  bool young = true;
  switch (rule.kind()) {
    case RuleKind::Proportional:
    case RuleKind::CEA:
    case RuleKind::PCEA:
      break;
    case RuleKind::AlphaMin:
      consistent = false;
      young = false;
      break;
    default:
      return std::nullopt;
  }
  return std::vector<std::pair<CatalogProperty, bool>>{
      {CatalogProperty::EqualTreatment, true},
      {CatalogProperty::OrderPreservation, true},
      {CatalogProperty::ResourceMonotonicity, true},
      {CatalogProperty::Anonymity, true},
      {CatalogProperty::Consistency, consistent},
      {CatalogProperty::ConverseConsistency, consistent},
      {CatalogProperty::CompositionDown, true},
      {CatalogProperty::CompositionUp, true},
      {CatalogProperty::YoungRepresentation, young},
  };
}

std::vector<ExpectationDiff> compare_with_catalog(const RuleSpec& rule,
                                                  const std::vector<Verdict>& battery) {
  std::vector<ExpectationDiff> diffs;
  auto expected = catalog_expectations(rule);
  if (!expected) return diffs;
  for (const auto& [property, want] : *expected) {
    for (const Verdict& v : battery) {
      if (v.axiom == property_name(property)) {
        if (v.passed != want) diffs.push_back(ExpectationDiff{property, want, v.passed});
        break;
      }
    }
  }
  return diffs;
}

// ---------------------------------------------------------------------------
// Rendering and replay
// ---------------------------------------------------------------------------

namespace {

std::string problem_string(const ClaimsProblem& p) {
  return "{claims=" + join_awards(p.claims()) + " estate=" + exact_string(p.estate()) + "}";
}

std::string aux_string(const WitnessAux& aux) {
  struct Visitor {
    std::string operator()(const std::monostate&) const { return "none"; }
    std::string operator()(const PerturbedProblemAux& a) const {
      return "perturbed" + problem_string(a.problem);
    }
    std::string operator()(const SubsetAux& a) const {
      return "subset{members=" + join_indices(a.members) + "}";
    }
    std::string operator()(const CoalitionAux& a) const {
      return "coalition{members=" + join_indices(a.members) +
             " claims=" + join_awards(a.reallocated_claims) + "}";
    }
    std::string operator()(const SecondEstateAux& a) const {
      return "estate{" + exact_string(a.estate) + "}";
    }
    std::string operator()(const PermutationAux& a) const {
      return "permutation{" + join_indices(a.perm) + "}";
    }
    std::string operator()(const LPairAux& a) const {
      return "L-pair{" + exact_string(a.first) + "," + exact_string(a.second) + "}";
    }
  };
  return std::visit(Visitor{}, aux);
}

}  // namespace

std::string witness_string(const Witness& w) {
  std::string out = "problem=" + problem_string(w.problem) + " aux=" + aux_string(w.aux);
  if (w.L) out += " L=" + exact_string(*w.L);
  if (!w.detail.empty()) out += " detail=\"" + w.detail + "\"";
  return out;
}

std::string to_string(const Verdict& v) {
  std::string out = "check=" + v.axiom + " rule=" + v.rule.name() +
                    " passed=" + (v.passed ? "true" : "false") +
                    " trials=" + std::to_string(v.trials_run) +
                    " seed=" + std::to_string(v.seed);
  if (v.witness) out += " witness={" + witness_string(*v.witness) + "}";
  return out;
}

bool replay(const Verdict& v) {
  if (v.passed || !v.witness) return false;
  const Witness& w = *v.witness;
  const ClaimsProblem& p = w.problem;
  Rational L = w.L.value_or(Rational(0));

  auto violated = [&](auto&& fn) {
    auto d = guarded([&] { return fn(); });
    return d.has_value();
  };

  if (v.axiom == "feasibility") return violated([&] { return feasibility_violation(v.rule, p); });
  if (v.axiom == "equal-treatment") {
    return violated([&] { return equal_treatment_violation(v.rule, p); });
  }
  if (v.axiom == "order-preservation") {
    return violated([&] { return order_preservation_violation(v.rule, p); });
  }
  if (v.axiom == "resource-monotonicity") {
    const auto& aux = std::get<SecondEstateAux>(w.aux);
    return violated([&] { return resource_monotonicity_violation(v.rule, p, aux.estate); });
  }
  if (v.axiom == "anonymity") {
    const auto& aux = std::get<PermutationAux>(w.aux);
    return violated([&] { return anonymity_violation(v.rule, p, aux.perm); });
  }
  if (v.axiom == "consistency" || v.axiom == "consistency-1") {
    const auto& aux = std::get<SubsetAux>(w.aux);
    return violated([&] { return consistency_violation(v.rule, p, aux.members); });
  }
  if (v.axiom == "converse-consistency") {
    const auto& aux = std::get<CoalitionAux>(w.aux);
    return violated([&] { return converse_consistency_violation(v.rule, p, aux.reallocated_claims); });
  }
  if (v.axiom == "composition-down") {
    const auto& aux = std::get<SecondEstateAux>(w.aux);
    return violated([&] { return composition_down_violation(v.rule, p, aux.estate); });
  }
  if (v.axiom == "composition-up") {
    const auto& aux = std::get<SecondEstateAux>(w.aux);
    return violated([&] { return composition_up_violation(v.rule, p, aux.estate); });
  }
  if (v.axiom == "continuity") {
    const auto& aux = std::get<PerturbedProblemAux>(w.aux);
    AwardVector x = allocate(v.rule, p);
    AwardVector y = allocate(v.rule, aux.problem);
    Rational change = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rational diff = y.values[i] - x.values[i];
      if (diff < 0) diff = -diff;
      if (diff > change) change = diff;
    }
    return change > Rational(static_cast<unsigned>(p.size())) * kContinuityBound * L;
  }
  if (v.axiom == "young-representation") {
    if (std::holds_alternative<LPairAux>(w.aux)) {
      const auto& aux = std::get<LPairAux>(w.aux);
      return violated([&] { return young_representation_violation(p, v.rule, aux.first); });
    }
    return true;
  }
  if (v.axiom == "nar") {
    if (!std::holds_alternative<CoalitionAux>(w.aux)) {
      // Engine error on the base problem: replaying is re-running the engine.
      return violated([&]() -> std::optional<std::string> {
        allocate(v.rule, p);
        return std::nullopt;
      });
    }
    const auto& aux = std::get<CoalitionAux>(w.aux);
    return violated([&] { return nar_violation(v.rule, p, aux.members, aux.reallocated_claims, L); });
  }
  if (v.axiom == "slba") return violated([&] { return slba_violation(v.rule, p, L); });
  if (v.axiom == "pinned") return violated([&] { return pinned_violation(v.rule, p, L); });
  if (v.axiom == "subl") return violated([&] { return subl_violation(v.rule, p, L); });
  if (v.axiom == "decentralizability") {
    const auto& aux = std::get<CoalitionAux>(w.aux);
    ClaimsProblem q = with_claims(p, aux.reallocated_claims);
    AwardVector before = allocate(v.rule, p);
    AwardVector after = allocate(v.rule, q);
    Rational sum_before = 0;
    Rational sum_after = 0;
    for (std::size_t idx : aux.members) {
      sum_before += before.values[idx];
      sum_after += after.values[idx];
    }
    return sum_before != sum_after;
  }
  if (v.axiom == "dual-involution") {
    return violated([&]() -> std::optional<std::string> {
      RuleSpec inner = RuleSpec::pcea(L);
      if (allocate(RuleSpec::dual_of(RuleSpec::dual_of(inner)), p) != allocate(inner, p)) {
        return std::string("mismatch");
      }
      return std::nullopt;
    });
  }
  if (v.axiom == "dual-identity") {
    return violated([&]() -> std::optional<std::string> {
      if (allocate(RuleSpec::pcea_dual(L), p) != pcea_dual_direct(p, L)) {
        return std::string("mismatch");
      }
      return std::nullopt;
    });
  }
  return false;
}

}  // namespace claims

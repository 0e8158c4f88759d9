#pragma once

#include "claims/problem.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace claims {

enum class RuleKind {
  Proportional,
  EqualAwards,
  CEA,
  CEL,
  PCEA,
  PCEADual,
  AlphaMin,
  DualOf,
};

/// Identifies an allocation engine. PCEA and PCEADual carry the baseline
/// parameter L; DualOf wraps another spec (nesting depth at most two, since
/// the dual of a dual collapses semantically).
class RuleSpec {
 public:
  static RuleSpec proportional() { return RuleSpec(RuleKind::Proportional); }
  static RuleSpec equal_awards() { return RuleSpec(RuleKind::EqualAwards); }
  static RuleSpec cea() { return RuleSpec(RuleKind::CEA); }
  static RuleSpec cel() { return RuleSpec(RuleKind::CEL); }
  static RuleSpec alpha_min() { return RuleSpec(RuleKind::AlphaMin); }
  static RuleSpec pcea(Rational L);
  static RuleSpec pcea_dual(Rational L);
  static RuleSpec dual_of(RuleSpec inner);

  RuleKind kind() const { return kind_; }
  bool has_param() const { return kind_ == RuleKind::PCEA || kind_ == RuleKind::PCEADual; }
  const Rational& param_L() const { return L_; }
  const RuleSpec& inner() const { return *inner_; }

  /// True when the spec is PCEADual or a DualOf wrapper: the engine routes the
  /// computation through the dual problem.
  bool is_dual_route() const {
    return kind_ == RuleKind::PCEADual || kind_ == RuleKind::DualOf;
  }

  /// Stable textual form, e.g. "pcea:20", "dual:cea". parse() inverts it.
  std::string name() const;
  static std::optional<RuleSpec> parse(std::string_view text);

  bool operator==(const RuleSpec& other) const;

 private:
  explicit RuleSpec(RuleKind kind) : kind_(kind) {}

  RuleKind kind_;
  Rational L_{0};
  std::shared_ptr<const RuleSpec> inner_;
};

/// Water level of an equal-awards or equal-losses division. segment_index is
/// a k satisfying c_k <= value <= c_{k+1} in sorted order, with c_0 = 0 and
/// c_{n+1} = +infinity (the smallest such k when the level ties a claim).
struct Waterline {
  Rational value;
  std::size_t segment_index;
};

/// Unique lambda with sum_i min(c_i, lambda) = e, found on the sorted prefix
/// segments in closed form (no bisection). Exists for every claims problem.
Waterline compute_lambda(const ClaimsProblem& problem);

/// Unique mu with sum_i max(c_i - mu, 0) = e (smallest such mu when e = 0).
Waterline compute_mu(const ClaimsProblem& problem);

/// min(L, lambda(problem)): the admissible effective baseline.
Rational effective_L(const ClaimsProblem& problem, const Rational& L);

/// Metadata of the baseline split at a given L: lambda, the clamped L, the
/// count k of sorted claims at or below it and the pinned agents S_0 (original
/// indices, ascending).
struct BaselineSplit {
  Rational lambda;
  Rational effective_L;
  std::size_t threshold_index;
  std::vector<std::size_t> pinned_agents;
};

BaselineSplit baseline_split(const ClaimsProblem& problem, const Rational& L);

/// Runs the engine selected by `spec`. Every engine except EqualAwards returns
/// an exactly feasible vector on every valid input (verified internally).
/// EqualAwards may violate claim-boundedness and is exposed for the alpha-min
/// branch and for feasibility counterexamples only.
///
/// Dual-route specs (PCEADual, DualOf) require strictly positive claims and
/// award the zero vector when the estate is zero instead of forming the
/// degenerate dual pair.
AwardVector allocate(const RuleSpec& spec, const ClaimsProblem& problem);

/// Second computation route for PCEADual: proportional division of the
/// residual claims c - c^(L_eff) over the full estate, with L_eff clamped by
/// the dual problem's lambda. Must agree with allocate(pcea_dual(L), .).
AwardVector pcea_dual_direct(const ClaimsProblem& problem, const Rational& L);

/// Parameter beta of the piecewise representation of the compromise family:
/// f(c, beta) = min(c, beta) for beta <= L_eff, and
/// f(c, beta) = min(c, L_eff) + (c - min(c, L_eff)) (beta - L_eff) above it.
/// Returns the unique beta in [0, L_eff + 1] balancing the budget.
Rational young_beta(const ClaimsProblem& problem, const Rational& L);

/// Evaluates f at young_beta; equals allocate(pcea(L), problem) exactly.
AwardVector young_eval(const ClaimsProblem& problem, const Rational& L);

/// Threshold at which the reallocation axioms read the parameter L for a
/// given rule on a given problem: min(L, lambda) for estate-side rules,
/// min(L, lambda of the dual problem) for dual-route rules.
Rational axiom_threshold(const RuleSpec& spec, const ClaimsProblem& problem, const Rational& L);

}  // namespace claims

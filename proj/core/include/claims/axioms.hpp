#pragma once

#include "claims/rules.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace claims {

// ---------------------------------------------------------------------------
// Verdicts and witnesses
// ---------------------------------------------------------------------------

/// The auxiliary data a failed check needs for standalone replay; the active
/// alternative matches the quantifier structure of the axiom being checked.
struct PerturbedProblemAux {
  ClaimsProblem problem;
};
struct SubsetAux {
  std::vector<std::size_t> members;
};
struct CoalitionAux {
  std::vector<std::size_t> members;
  std::vector<Rational> reallocated_claims;
};
struct SecondEstateAux {
  Rational estate;
};
struct PermutationAux {
  std::vector<std::size_t> perm;
};
struct LPairAux {
  Rational first;
  Rational second;
};

using WitnessAux = std::variant<std::monostate, PerturbedProblemAux, SubsetAux, CoalitionAux,
                                SecondEstateAux, PermutationAux, LPairAux>;

struct Witness {
  ClaimsProblem problem;
  WitnessAux aux;
  std::string detail;
  /// Threshold the axiom was read at, for the L-parametric checks.
  std::optional<Rational> L;
};

struct Verdict {
  std::string axiom;
  RuleSpec rule;
  bool passed = true;
  int trials_run = 0;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
};

/// Stable one-line rendering (exact rationals), used by reports and by the
/// determinism tests.
std::string to_string(const Verdict& verdict);
std::string witness_string(const Witness& witness);

/// Re-evaluates a failed verdict's witness from scratch. Returns true when the
/// violation reproduces exactly.
bool replay(const Verdict& verdict);

// ---------------------------------------------------------------------------
// Randomized suite configuration
// ---------------------------------------------------------------------------

/// Deterministic generator configuration. Each trial derives its own RNG
/// stream from (seed, trial index) by counter splitting, so results do not
/// depend on scheduling and replay is exact.
struct GenConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_agents = 8;
  /// Inner draws per generated problem for quantifiers over coalitions,
  /// subsets, estates or reallocations.
  int inner_trials = 20;
  /// Claims are drawn as num/den with num in [1, claim_num_max] (0 allowed
  /// only when allow_zero_claims) and den in [1, claim_den_max]. The estate is
  /// a uniform rational fraction of the total claim, bounded away from 0 and
  /// c_N.
  int claim_num_max = 60;
  int claim_den_max = 6;
  bool allow_zero_claims = false;
};

// ---------------------------------------------------------------------------
// Axiom checkers
// ---------------------------------------------------------------------------
// All checkers share the same contract: deterministically generate trials from
// cfg, evaluate the exact condition, and return a Verdict that carries a
// replayable witness on failure. Engine errors inside a trial are recorded as
// failures with the offending instance as witness.

Verdict check_feasibility(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_equal_treatment(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_order_preservation(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_resource_monotonicity(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_anonymity(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_consistency(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_consistency1(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_converse_consistency(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_composition_down(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_composition_up(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_continuity_sampled(const RuleSpec& rule, const GenConfig& cfg);
Verdict check_young_representation(const RuleSpec& rule, const GenConfig& cfg);

Verdict check_nar(const RuleSpec& rule, const GenConfig& cfg, const Rational& L);
Verdict check_slba(const RuleSpec& rule, const GenConfig& cfg, const Rational& L);
Verdict check_pinned(const RuleSpec& rule, const GenConfig& cfg, const Rational& L);
Verdict check_subl(const RuleSpec& rule, const GenConfig& cfg, const Rational& L);
Verdict check_decentralizability(const RuleSpec& rule, const GenConfig& cfg, const Rational& L);

// ---------------------------------------------------------------------------
// Characterization oracles
// ---------------------------------------------------------------------------

/// Two-sided oracle for the award-side characterization: the compromise rule
/// at L passes both no-advantageous-reallocation and the sustainable lower
/// bound, while proportional fails the bound and constrained equal awards
/// fails the reallocation axiom, each with a stored witness.
std::vector<Verdict> theorem1_oracle(const GenConfig& cfg, const Rational& L);

/// Loss-side counterpart: the dual compromise rule passes both
/// no-advantageous-reallocation and the sustainable loss bound at the
/// dual-clamped threshold.
std::vector<Verdict> theorem2_oracle(const GenConfig& cfg, const Rational& L);

/// The alpha-min rule passes both characterizing axioms at L = c_1 on
/// problems with c_1 < e/n.
Verdict check_alpha_min_characterization(const GenConfig& cfg);

// ---------------------------------------------------------------------------
// Property battery and catalog expectations
// ---------------------------------------------------------------------------

enum class CatalogProperty {
  EqualTreatment,
  OrderPreservation,
  ResourceMonotonicity,
  Anonymity,
  Consistency,
  ConverseConsistency,
  CompositionDown,
  CompositionUp,
  YoungRepresentation,
};

const char* property_name(CatalogProperty p);

/// Runs the full battery. The nine catalog properties always run; the
/// threshold-dependent checks run when L is provided.
std::vector<Verdict> run_battery(const RuleSpec& rule, const GenConfig& cfg,
                                 const std::optional<Rational>& L);

/// Expected yes/no pattern for the four catalog rules (proportional,
/// constrained equal awards, alpha-min, compromise family), bundled as data.
/// Returns nullopt for rules outside the catalog.
std::optional<std::vector<std::pair<CatalogProperty, bool>>> catalog_expectations(
    const RuleSpec& rule);

struct ExpectationDiff {
  CatalogProperty property;
  bool expected;
  bool observed;
};

/// Compares battery verdicts against the catalog expectations. Empty result
/// means the observed pattern matches cell for cell.
std::vector<ExpectationDiff> compare_with_catalog(const RuleSpec& rule,
                                                  const std::vector<Verdict>& battery);

// ---------------------------------------------------------------------------
// Single-instance predicates (shared by checkers, replay and tests)
// ---------------------------------------------------------------------------
// Each returns a violation description, or nullopt when the instance
// satisfies the condition.

std::optional<std::string> feasibility_violation(const RuleSpec& rule, const ClaimsProblem& p);
std::optional<std::string> equal_treatment_violation(const RuleSpec& rule, const ClaimsProblem& p);
std::optional<std::string> order_preservation_violation(const RuleSpec& rule,
                                                        const ClaimsProblem& p);
std::optional<std::string> resource_monotonicity_violation(const RuleSpec& rule,
                                                           const ClaimsProblem& p,
                                                           const Rational& second_estate);
std::optional<std::string> anonymity_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                               const std::vector<std::size_t>& perm);
std::optional<std::string> consistency_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                                 const std::vector<std::size_t>& subset);
std::optional<std::string> converse_consistency_violation(const RuleSpec& rule,
                                                          const ClaimsProblem& p,
                                                          const std::vector<Rational>& candidate);
std::optional<std::string> composition_down_violation(const RuleSpec& rule,
                                                      const ClaimsProblem& p,
                                                      const Rational& reduced_estate);
std::optional<std::string> composition_up_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                                    const Rational& larger_estate);
std::optional<std::string> nar_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                         const std::vector<std::size_t>& coalition,
                                         const std::vector<Rational>& reallocated,
                                         const Rational& L);
std::optional<std::string> slba_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                          const Rational& L);
std::optional<std::string> pinned_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                            const Rational& L);
std::optional<std::string> subl_violation(const RuleSpec& rule, const ClaimsProblem& p,
                                          const Rational& L);
std::optional<std::string> young_representation_violation(const ClaimsProblem& p,
                                                          const RuleSpec& rule,
                                                          const Rational& L_candidate);

/// Coalition totals before and after a reallocation; the pair behind any
/// no-advantageous-reallocation witness.
std::pair<Rational, Rational> nar_coalition_sums(const RuleSpec& rule, const ClaimsProblem& p,
                                                 const std::vector<std::size_t>& coalition,
                                                 const std::vector<Rational>& reallocated);

}  // namespace claims

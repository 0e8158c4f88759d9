#pragma once

#include "claims/axioms.hpp"
#include "claims/problem.hpp"

#include <optional>
#include <vector>

namespace claims {

enum class Ordering {
  StrictlyBetter,
  Equal,
  StrictlyWorse,
  Incomparable,
};

/// Comparison outcome plus the first index (into the ascending-sorted
/// vectors, 0-based) at which the two sides differ. Leximin never yields
/// Incomparable; Lorenz does when the curves cross.
struct OrderingResult {
  Ordering relation;
  std::optional<std::size_t> first_diff_index;
};

const char* ordering_name(Ordering o);

/// Lexicographic comparison of ascending-sorted award vectors: absolute
/// priority to the worst-off, then the second worst-off, and so on.
OrderingResult leximin_compare(const AwardVector& x, const AwardVector& y);

/// Ascending partial sums of an award vector.
struct LorenzCurve {
  std::vector<Rational> cumulative;
};

LorenzCurve lorenz_curve(const AwardVector& x);

/// Lorenz domination at equal totals: every cumulative sum of x weakly above
/// that of y. Throws UnequalTotals when the totals differ.
OrderingResult lorenz_compare(const AwardVector& x, const AwardVector& y);

/// Checks that along an ascending grid of baselines within [0, lambda] the
/// compromise family is weakly Lorenz- and leximin-monotone, and strictly so
/// on every adjacent pair where the allocations can actually differ: some
/// claim lies in (L, L'] or at least two distinct claim values exceed L'.
Verdict verify_L_monotonicity(const ClaimsProblem& problem, const std::vector<Rational>& L_grid);

/// Checks the Lorenz sandwich at a given L in [0, lambda]:
/// CEA >= psi^L >= proportional, with alpha-min sitting between CEA and psi^L
/// when L <= c_1 and between psi^L and proportional otherwise.
Verdict verify_sandwich(const ClaimsProblem& problem, const Rational& L);

/// True when allocations at L < L' must differ (see verify_L_monotonicity).
bool strictness_expected(const ClaimsProblem& problem, const Rational& L, const Rational& L_prime);

}  // namespace claims

#pragma once

#include "claims/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

namespace claims {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonClaimsProblem : Error { using Error::Error; };
struct NegativeClaim : Error { using Error::Error; };
struct NegativeEstate : Error { using Error::Error; };
struct EmptyAgentSet : Error { using Error::Error; };
struct EmptySubset : Error { using Error::Error; };
struct ImproperSubset : Error { using Error::Error; };
struct ZeroEstateDual : Error { using Error::Error; };
struct DualRequiresPositiveClaims : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UnequalTotals : Error { using Error::Error; };
struct GridOutOfRange : Error { using Error::Error; };

/// A claims problem: non-negative claims whose total strictly exceeds a
/// non-negative estate. Immutable once constructed; the constructor is the
/// single validation point, so a ClaimsProblem value is always well formed.
class ClaimsProblem {
 public:
  ClaimsProblem(std::vector<Rational> claims, Rational estate);

  const std::vector<Rational>& claims() const { return claims_; }
  const Rational& estate() const { return estate_; }
  const Rational& total_claims() const { return total_; }
  std::size_t size() const { return claims_.size(); }

  /// Deficit of the problem, c_N - e; the estate of the dual problem.
  Rational deficit() const { return total_ - estate_; }

  bool operator==(const ClaimsProblem& other) const {
    return claims_ == other.claims_ && estate_ == other.estate_;
  }

 private:
  std::vector<Rational> claims_;
  Rational estate_;
  Rational total_;
};

/// Validation entry point; equivalent to the constructor, named for clarity
/// at call sites that deal with raw input.
ClaimsProblem validate_problem(std::vector<Rational> claims, Rational estate);

/// Claims in ascending order plus the permutation back to the caller's agent
/// order. perm[s] is the original index of the claim at sorted position s.
/// Ties keep their original relative order (stable sort).
struct CanonicalProblem {
  std::vector<Rational> sorted_claims;
  std::vector<std::size_t> perm;
};

CanonicalProblem canonicalize(const ClaimsProblem& problem);

/// One award per agent, aligned with the problem's original agent order.
struct AwardVector {
  std::vector<Rational> values;

  bool operator==(const AwardVector& other) const = default;
};

/// Exact feasibility: 0 <= award <= claim per agent and awards summing to the
/// estate. No tolerances anywhere.
bool is_feasible(const ClaimsProblem& problem, const AwardVector& awards);

/// Result of restricting a problem to a subset whose reduced estate equals its
/// reduced total claim: the full-claims vector is the only feasible division.
struct FullAwardCase {
  std::vector<Rational> claims;
  Rational estate;
};

using Restriction = std::variant<ClaimsProblem, FullAwardCase>;

/// Reduced problem (c|_S, sum of x over S) for a non-empty proper subset of
/// agents. Requires x feasible for the problem. Returns FullAwardCase when the
/// reduced pair is not a claims problem, which can only happen with equality.
Restriction restrict(const ClaimsProblem& problem, const AwardVector& awards,
                     const std::vector<std::size_t>& subset);

/// Same claims, estate replaced by the deficit. Throws ZeroEstateDual when the
/// estate is zero (the dual pair would not be a claims problem); callers that
/// implement dual rules handle that boundary by awarding zero.
ClaimsProblem dual_problem(const ClaimsProblem& problem);

}  // namespace claims

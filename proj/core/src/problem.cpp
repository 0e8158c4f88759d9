#include "claims/problem.hpp"

#include <algorithm>
#include <numeric>

namespace claims {

ClaimsProblem::ClaimsProblem(std::vector<Rational> claims, Rational estate)
    : claims_(std::move(claims)), estate_(std::move(estate)) {
  if (claims_.empty()) throw EmptyAgentSet("claims problem needs at least one agent");
  for (const Rational& c : claims_) {
    if (c < 0) throw NegativeClaim("claim must be non-negative, got " + exact_string(c));
  }
  if (estate_ < 0) throw NegativeEstate("estate must be non-negative, got " + exact_string(estate_));
  total_ = sum(claims_);
  if (total_ <= estate_) {
    throw NonClaimsProblem("total claims " + exact_string(total_) +
                           " must strictly exceed estate " + exact_string(estate_));
  }
}

ClaimsProblem validate_problem(std::vector<Rational> claims, Rational estate) {
  return ClaimsProblem(std::move(claims), std::move(estate));
}

CanonicalProblem canonicalize(const ClaimsProblem& problem) {
  CanonicalProblem canon;
  canon.perm.resize(problem.size());
  std::iota(canon.perm.begin(), canon.perm.end(), std::size_t{0});
  std::stable_sort(canon.perm.begin(), canon.perm.end(),
                   [&](std::size_t a, std::size_t b) {
                     return problem.claims()[a] < problem.claims()[b];
                   });
  canon.sorted_claims.reserve(problem.size());
  for (std::size_t idx : canon.perm) canon.sorted_claims.push_back(problem.claims()[idx]);
  return canon;
}

bool is_feasible(const ClaimsProblem& problem, const AwardVector& awards) {
  if (awards.values.size() != problem.size()) return false;
  Rational total = 0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const Rational& x = awards.values[i];
    if (x < 0 || x > problem.claims()[i]) return false;
    total += x;
  }
  return total == problem.estate();
}

Restriction restrict(const ClaimsProblem& problem, const AwardVector& awards,
                     const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw EmptySubset("subset of agents must be non-empty");
  std::vector<bool> seen(problem.size(), false);
  for (std::size_t idx : subset) {
    if (idx >= problem.size()) throw ImproperSubset("agent index out of range");
    if (seen[idx]) throw ImproperSubset("duplicate agent index in subset");
    seen[idx] = true;
  }
  if (subset.size() >= problem.size()) {
    throw ImproperSubset("subset must be a proper subset of the agents");
  }
  if (!is_feasible(problem, awards)) {
    throw Error("restrict requires a feasible award vector");
  }

  std::vector<Rational> reduced_claims;
  reduced_claims.reserve(subset.size());
  Rational reduced_estate = 0;
  for (std::size_t idx : subset) {
    reduced_claims.push_back(problem.claims()[idx]);
    reduced_estate += awards.values[idx];
  }
  Rational reduced_total = sum(reduced_claims);
  if (reduced_total <= reduced_estate) {
    // Feasibility forces reduced_estate <= reduced_total, so this branch is
    // the equality case: every subset member was awarded her full claim.
    return FullAwardCase{std::move(reduced_claims), std::move(reduced_estate)};
  }
  return ClaimsProblem(std::move(reduced_claims), std::move(reduced_estate));
}

ClaimsProblem dual_problem(const ClaimsProblem& problem) {
  if (problem.estate() == 0) {
    throw ZeroEstateDual("dual of a zero-estate problem is not a claims problem");
  }
  return ClaimsProblem(problem.claims(), problem.deficit());
}

}  // namespace claims

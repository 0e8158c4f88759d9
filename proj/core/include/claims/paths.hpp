#pragma once

#include "claims/axioms.hpp"
#include "claims/rules.hpp"

#include <vector>

namespace claims {

struct PathSample {
  Rational estate;
  std::vector<Rational> awards;
};

/// Award path of one rule for a fixed claims vector, sampled on an ascending
/// estate grid over [0, c_N). Samples include every kink estate exactly, so
/// the trace is the exact polyline of the (piecewise linear) path, not an
/// approximation of it.
struct PathTrace {
  RuleSpec rule;
  std::vector<Rational> claims;
  std::vector<PathSample> samples;
};

/// Estates at which the rule's award path can change direction: where the
/// relevant waterline crosses a claim value or the baseline parameter. For
/// dual-route rules the crossings are mirrored through the deficit.
std::vector<Rational> kink_estates(const RuleSpec& rule, const std::vector<Rational>& claims);

/// Traces the award path on the union of a uniform grid of `grid_points`
/// interior estates, the zero estate and all kink estates.
PathTrace trace_path(const RuleSpec& rule, const std::vector<Rational>& claims,
                     std::size_t grid_points);

/// One compromise-family trace per claims vector at a fixed baseline; the
/// overlay data behind the monotone path-tree figures.
std::vector<PathTrace> trace_tree(const Rational& L,
                                  const std::vector<std::vector<Rational>>& claim_vectors,
                                  std::size_t grid_points);

/// Verifies the two-stage estate-reduction identity along the path:
/// allocate(c, e') equals allocate applied to (allocate(c, e), e') for every
/// sampled pair e' < e.
Verdict verify_path_nesting(const RuleSpec& rule, const std::vector<Rational>& claims,
                            const std::vector<std::pair<Rational, Rational>>& estate_pairs);

}  // namespace claims

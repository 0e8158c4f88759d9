#pragma once

#include "problem_file.hpp"

#include "claims/axioms.hpp"
#include "claims/inequality.hpp"
#include "claims/paths.hpp"
#include "claims/rules.hpp"

#include <string>
#include <vector>

namespace claims::cli {

/// The only place values turn into text: exact "p/q" with `exact`, otherwise
/// round-half-even decimals at `precision` with trailing zeros trimmed.
struct RenderOptions {
  unsigned precision = 3;
  bool exact = false;
};

std::string render_value(const Rational& value, const RenderOptions& opts);

/// One row per rule plus problem metadata (waterlines; baseline split for
/// parametric rules). Deterministic bytes for identical inputs.
std::string allocate_report(const ProblemFile& input, const std::vector<RuleSpec>& rules,
                            const RenderOptions& opts);

/// One row per grid value with the effective baseline annotated, followed by
/// the Lorenz/leximin monotonicity verdict across the grid.
std::string sweep_report(const ProblemFile& input, const std::vector<Rational>& grid,
                         const RenderOptions& opts);

/// Leximin and Lorenz verdicts with first-difference indices and cumulative
/// sums.
std::string compare_report(const ProblemFile& input, const RuleSpec& rule_a,
                           const RuleSpec& rule_b, const RenderOptions& opts);

struct AxiomsRun {
  std::string text;
  bool has_expectations = false;
  bool matches = true;
};

/// Runs the checker battery and compares against the bundled catalog
/// expectations when the rule is one of the catalog rules.
AxiomsRun axioms_report(const RuleSpec& rule, const GenConfig& cfg,
                        const std::optional<Rational>& L);

/// Delimiter-separated award-path rows: estate, then one award per agent, in
/// input order, with kink estates included exactly.
std::string path_csv(const RuleSpec& rule, const std::vector<Rational>& claims,
                     std::size_t grid_points, const std::vector<std::string>& labels,
                     const RenderOptions& opts);

}  // namespace claims::cli

#pragma once

#include "claims/problem.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace claims::cli {

struct ParseError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};

/// Parsed input problem. Claims and estate are written as finite decimal
/// expansions only, so parsing is exact by construction.
struct ProblemFile {
  std::vector<Rational> claims;
  Rational estate;
  std::vector<std::string> labels;  // empty, or one label per agent

  ClaimsProblem to_problem() const { return ClaimsProblem(claims, estate); }
};

/// Key-value format, one key per line, values whitespace- or comma-separated:
///
///   # comment
///   claims = 10 50 70
///   estate = 100
///   labels = alice bob carol
///
/// Errors carry "<name>:<line>:<column>".
ProblemFile parse_problem_file(std::istream& in, const std::string& name);

/// Batch format: one problem per line, "claims;estate" with comma-separated
/// claims, e.g. "10,50,70;100".
ProblemFile parse_batch_line(const std::string& line, const std::string& name, int line_no);

}  // namespace claims::cli

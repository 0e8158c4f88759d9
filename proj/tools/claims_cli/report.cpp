#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace claims::cli {

namespace {

std::string joined(const std::vector<Rational>& values, const RenderOptions& opts) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += render_value(values[i], opts);
  }
  return out;
}

std::string joined_indices(const std::vector<std::size_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

void append_problem_header(std::ostream& os, const ProblemFile& input, const ClaimsProblem& p,
                           const RenderOptions& opts) {
  os << "claims: " << joined(p.claims(), opts) << '\n';
  if (!input.labels.empty()) {
    os << "agents:";
    for (const std::string& label : input.labels) os << ' ' << label;
    os << '\n';
  }
  os << "estate: " << render_value(p.estate(), opts) << '\n';
  os << "total-claims: " << render_value(p.total_claims(), opts) << '\n';
}

}  // namespace

std::string render_value(const Rational& value, const RenderOptions& opts) {
  return opts.exact ? exact_string(value) : decimal_string(value, opts.precision);
}

std::string allocate_report(const ProblemFile& input, const std::vector<RuleSpec>& rules,
                            const RenderOptions& opts) {
  ClaimsProblem p = input.to_problem();
  std::ostringstream os;
  append_problem_header(os, input, p, opts);
  os << "lambda: " << render_value(compute_lambda(p).value, opts) << '\n';
  os << "mu: " << render_value(compute_mu(p).value, opts) << '\n';
  for (const RuleSpec& rule : rules) {
    AwardVector x = allocate(rule, p);
    os << "rule=" << rule.name();
    if (rule.has_param()) {
      if (rule.is_dual_route() && p.estate() == 0) {
        os << " L_eff=0 k=0 S0=[]";
      } else {
        BaselineSplit split = baseline_split(rule.is_dual_route() ? dual_problem(p) : p,
                                             rule.param_L());
        os << " L_eff=" << render_value(split.effective_L, opts) << " k=" << split.threshold_index
           << " S0=" << joined_indices(split.pinned_agents);
      }
    }
    if (rule.kind() == RuleKind::EqualAwards && !is_feasible(p, x)) {
      os << " feasible=false";
    }
    os << " awards: " << joined(x.values, opts) << '\n';
  }
  return os.str();
}

std::string sweep_report(const ProblemFile& input, const std::vector<Rational>& grid,
                         const RenderOptions& opts) {
  ClaimsProblem p = input.to_problem();
  Rational lambda = compute_lambda(p).value;
  std::ostringstream os;
  append_problem_header(os, input, p, opts);
  os << "lambda: " << render_value(lambda, opts) << '\n';
  std::vector<Rational> clamped;
  for (const Rational& L : grid) {
    AwardVector x = allocate(RuleSpec::pcea(L), p);
    Rational L_eff = L < lambda ? L : lambda;
    os << "L=" << render_value(L, opts) << " L_eff=" << render_value(L_eff, opts)
       << " awards: " << joined(x.values, opts) << '\n';
    clamped.push_back(L_eff);
  }
  std::sort(clamped.begin(), clamped.end());
  clamped.erase(std::unique(clamped.begin(), clamped.end()), clamped.end());
  Verdict mono = verify_L_monotonicity(p, clamped);
  os << "L-monotonicity: " << (mono.passed ? "pass" : "fail") << '\n';
  if (!mono.passed && mono.witness) {
    os << "L-monotonicity-witness: " << witness_string(*mono.witness) << '\n';
  }
  return os.str();
}

std::string compare_report(const ProblemFile& input, const RuleSpec& rule_a,
                           const RuleSpec& rule_b, const RenderOptions& opts) {
  ClaimsProblem p = input.to_problem();
  std::ostringstream os;
  append_problem_header(os, input, p, opts);
  AwardVector a = allocate(rule_a, p);
  AwardVector b = allocate(rule_b, p);
  os << "rule-a=" << rule_a.name() << " awards: " << joined(a.values, opts) << '\n';
  os << "rule-b=" << rule_b.name() << " awards: " << joined(b.values, opts) << '\n';

  OrderingResult lexi = leximin_compare(a, b);
  os << "leximin: " << ordering_name(lexi.relation);
  if (lexi.first_diff_index) os << " first-diff-index=" << *lexi.first_diff_index;
  os << '\n';

  OrderingResult lorenz = lorenz_compare(a, b);
  os << "lorenz: " << ordering_name(lorenz.relation);
  if (lorenz.first_diff_index) os << " first-diff-index=" << *lorenz.first_diff_index;
  os << '\n';
  os << "lorenz-cumulative-a: " << joined(lorenz_curve(a).cumulative, opts) << '\n';
  os << "lorenz-cumulative-b: " << joined(lorenz_curve(b).cumulative, opts) << '\n';
  return os.str();
}

AxiomsRun axioms_report(const RuleSpec& rule, const GenConfig& cfg,
                        const std::optional<Rational>& L) {
  AxiomsRun run;
  std::ostringstream os;
  os << "battery rule=" << rule.name() << " seed=" << cfg.seed << " trials=" << cfg.trials;
  if (L) os << " L=" << exact_string(*L);
  os << '\n';

  std::vector<Verdict> verdicts = run_battery(rule, cfg, L);
  for (const Verdict& v : verdicts) os << to_string(v) << '\n';

  auto expected = catalog_expectations(rule);
  run.has_expectations = expected.has_value();
  if (expected) {
    std::vector<ExpectationDiff> diffs = compare_with_catalog(rule, verdicts);
    run.matches = diffs.empty();
    for (const ExpectationDiff& d : diffs) {
      os << "catalog-diff property=" << property_name(d.property)
         << " expected=" << (d.expected ? "pass" : "fail")
         << " observed=" << (d.observed ? "pass" : "fail") << '\n';
    }
    os << "catalog-match: " << (run.matches ? "yes" : "no") << '\n';
  } else {
    os << "catalog-match: n/a\n";
  }
  run.text = os.str();
  return run;
}

std::string path_csv(const RuleSpec& rule, const std::vector<Rational>& claims,
                     std::size_t grid_points, const std::vector<std::string>& labels,
                     const RenderOptions& opts) {
  PathTrace trace = trace_path(rule, claims, grid_points);
  std::ostringstream os;
  os << "estate";
  for (std::size_t i = 0; i < claims.size(); ++i) {
    os << ',' << (i < labels.size() ? labels[i] : "award" + std::to_string(i + 1));
  }
  os << '\n';
  for (const PathSample& sample : trace.samples) {
    os << render_value(sample.estate, opts);
    for (const Rational& award : sample.awards) os << ',' << render_value(award, opts);
    os << '\n';
  }
  return os.str();
}

}  // namespace claims::cli

#include "problem_file.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace claims;
using namespace claims::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCatalogMismatch = 3;

ProblemFile read_problem(const std::string& path) {
  if (path == "-") {
    return parse_problem_file(std::cin, "<stdin>");
  }
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_problem_file(in, path);
}

RuleSpec parse_rule_or_throw(const std::string& text) {
  auto spec = RuleSpec::parse(text);
  if (!spec) throw UsageError("unknown rule '" + text + "'");
  return *spec;
}

Rational parse_value_or_throw(const std::string& text, const std::string& what) {
  auto value = parse_number(text);
  if (!value) throw UsageError("cannot parse " + what + " '" + text + "'");
  return *value;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file " + out_path);
  out << text;
}

struct Options {
  std::string input = "-";
  std::string out;
  std::vector<std::string> rules;
  std::string grid;
  unsigned grid_points = 64;
  unsigned precision = 3;
  bool exact = false;
  bool batch = false;
  std::uint64_t seed = 1;
  int trials = 200;
  std::string L;
};

int run(int argc, char** argv) {
  CLI::App app{"Exact division rules for claims problems"};
  app.require_subcommand(1);
  Options opt;

  auto add_render_flags = [&](CLI::App* cmd) {
    cmd->add_option("--precision", opt.precision, "Decimal digits in rendered values");
    cmd->add_flag("--exact", opt.exact, "Render exact rationals p/q instead of decimals");
  };

  CLI::App* allocate_cmd = app.add_subcommand("allocate", "Run rules on one problem");
  allocate_cmd->add_option("input", opt.input, "Problem file, or - for stdin");
  allocate_cmd->add_option("--rule", opt.rules, "Rule to run (repeatable)")->allow_extra_args(false);
  allocate_cmd->add_flag("--batch", opt.batch, "Input holds one problem per line: claims;estate");
  allocate_cmd->add_option("--out", opt.out, "Write the report to a file");
  add_render_flags(allocate_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep the compromise baseline over a grid");
  sweep_cmd->add_option("input", opt.input, "Problem file, or - for stdin");
  sweep_cmd->add_option("--grid", opt.grid, "Comma-separated baseline values");
  sweep_cmd->add_option("--out", opt.out, "Write the report to a file");
  add_render_flags(sweep_cmd);

  CLI::App* axioms_cmd = app.add_subcommand("axioms", "Run the axiom battery for one rule");
  axioms_cmd->add_option("--rule", opt.rules, "Rule to check")->allow_extra_args(false);
  axioms_cmd->add_option("--seed", opt.seed, "Suite seed");
  axioms_cmd->add_option("--trials", opt.trials, "Generated problems per checker");
  axioms_cmd->add_option("--L", opt.L, "Threshold for the baseline-dependent checks");
  axioms_cmd->add_option("--out", opt.out, "Write the report to a file");

  CLI::App* path_cmd = app.add_subcommand("path", "Emit award-path plot data");
  path_cmd->add_option("input", opt.input, "Problem file (estate ignored), or - for stdin");
  path_cmd->add_option("--rule", opt.rules, "Rule to trace")->allow_extra_args(false);
  path_cmd->add_option("--grid", opt.grid_points, "Number of uniform grid points");
  path_cmd->add_option("--out", opt.out, "Write the rows to a file");
  add_render_flags(path_cmd);

  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two rules on one problem");
  compare_cmd->add_option("input", opt.input, "Problem file, or - for stdin");
  compare_cmd->add_option("--rule", opt.rules, "Rule (give exactly twice)")->allow_extra_args(false);
  compare_cmd->add_option("--out", opt.out, "Write the report to a file");
  add_render_flags(compare_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  RenderOptions render{opt.precision, opt.exact};

  if (allocate_cmd->parsed()) {
    if (opt.rules.empty()) throw UsageError("allocate needs at least one --rule");
    std::vector<RuleSpec> rules;
    for (const std::string& r : opt.rules) rules.push_back(parse_rule_or_throw(r));
    std::ostringstream out;
    if (opt.batch) {
      std::ifstream file_in;
      std::istream* in = &std::cin;
      std::string name = "<stdin>";
      if (opt.input != "-") {
        file_in.open(opt.input);
        if (!file_in) throw ParseError(opt.input + ": cannot open");
        in = &file_in;
        name = opt.input;
      }
      std::string line;
      int line_no = 0;
      bool first = true;
      while (std::getline(*in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!first) out << '\n';
        first = false;
        out << allocate_report(parse_batch_line(line, name, line_no), rules, render);
      }
    } else {
      out << allocate_report(read_problem(opt.input), rules, render);
    }
    write_output(opt.out, out.str());
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    if (opt.grid.empty()) throw UsageError("sweep needs a non-empty --grid");
    std::vector<Rational> grid;
    std::stringstream ss(opt.grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      grid.push_back(parse_value_or_throw(item, "grid value"));
    }
    if (grid.empty()) throw UsageError("sweep needs a non-empty --grid");
    write_output(opt.out, sweep_report(read_problem(opt.input), grid, render));
    return kExitOk;
  }

  if (axioms_cmd->parsed()) {
    if (opt.rules.size() != 1) throw UsageError("axioms needs exactly one --rule");
    if (opt.trials < 1) throw UsageError("--trials must be positive");
    RuleSpec rule = parse_rule_or_throw(opt.rules.front());
    GenConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    std::optional<Rational> L;
    if (!opt.L.empty()) L = parse_value_or_throw(opt.L, "--L");
    AxiomsRun run = axioms_report(rule, cfg, L);
    write_output(opt.out, run.text);
    return run.has_expectations && !run.matches ? kExitCatalogMismatch : kExitOk;
  }

  if (path_cmd->parsed()) {
    if (opt.rules.size() != 1) throw UsageError("path needs exactly one --rule");
    RuleSpec rule = parse_rule_or_throw(opt.rules.front());
    ProblemFile input = read_problem(opt.input);
    write_output(opt.out, path_csv(rule, input.claims, opt.grid_points, input.labels, render));
    return kExitOk;
  }

  if (compare_cmd->parsed()) {
    if (opt.rules.size() != 2) throw UsageError("compare needs --rule given exactly twice");
    RuleSpec a = parse_rule_or_throw(opt.rules[0]);
    RuleSpec b = parse_rule_or_throw(opt.rules[1]);
    write_output(opt.out, compare_report(read_problem(opt.input), a, b, render));
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const claims::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitValidation;
  }
}

#include "problem_file.hpp"
#include "report.hpp"

#include <doctest.h>

#include <sstream>

using namespace claims;
using namespace claims::cli;

namespace {

ProblemFile table2_file() {
  ProblemFile f;
  f.claims = {10, 50, 70};
  f.estate = 100;
  return f;
}

std::vector<RuleSpec> table2_rules() {
  return {RuleSpec::proportional(), RuleSpec::cea(),     RuleSpec::cel(),
          RuleSpec::alpha_min(),    RuleSpec::pcea(5),   RuleSpec::pcea(20),
          RuleSpec::pcea(40)};
}

}  // namespace

TEST_CASE("problem files parse with comments and labels") {
  std::istringstream in(
      "# three claimants\n"
      "claims = 10 50 70\n"
      "estate = 100\n"
      "labels = a b c\n");
  ProblemFile f = parse_problem_file(in, "p.txt");
  CHECK(f.claims == std::vector<Rational>{10, 50, 70});
  CHECK(f.estate == 100);
  CHECK(f.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(f.to_problem().total_claims() == 130);
}

TEST_CASE("problem file errors carry positions") {
  std::istringstream bad("claims = 10 1/3\nestate = 5\n");
  try {
    parse_problem_file(bad, "p.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p.txt:1:13") != std::string::npos);
  }

  std::istringstream missing("claims = 10 50\n");
  CHECK_THROWS_AS(parse_problem_file(missing, "p.txt"), ParseError);

  std::istringstream labels("claims = 1 2\nestate = 1\nlabels = only_one\n");
  CHECK_THROWS_AS(parse_problem_file(labels, "p.txt"), ParseError);

  std::istringstream unknown("claim = 1 2\nestate = 1\n");
  CHECK_THROWS_AS(parse_problem_file(unknown, "p.txt"), ParseError);
}

TEST_CASE("batch lines parse") {
  ProblemFile f = parse_batch_line("10,50,70;100", "b.txt", 1);
  CHECK(f.claims == std::vector<Rational>{10, 50, 70});
  CHECK(f.estate == 100);
  CHECK_THROWS_AS(parse_batch_line("10,50,70", "b.txt", 1), ParseError);
  CHECK_THROWS_AS(parse_batch_line(";100", "b.txt", 1), ParseError);
  CHECK_THROWS_AS(parse_batch_line("1,2;3;4", "b.txt", 1), ParseError);
}

TEST_CASE("allocation report reproduces the published table") {
  std::string report = allocate_report(table2_file(), table2_rules(), RenderOptions{3, false});
  CHECK(report ==
        "claims: 10 50 70\n"
        "estate: 100\n"
        "total-claims: 130\n"
        "lambda: 45\n"
        "mu: 10\n"
        "rule=proportional awards: 7.692 38.462 53.846\n"
        "rule=cea awards: 10 45 45\n"
        "rule=cel awards: 0 40 60\n"
        "rule=alpha-min awards: 10 38 52\n"
        "rule=pcea:5 L_eff=5 k=0 S0=[] awards: 8.696 38.261 53.043\n"
        "rule=pcea:20 L_eff=20 k=1 S0=[0] awards: 10 38.75 51.25\n"
        "rule=pcea:40 L_eff=40 k=1 S0=[0] awards: 10 42.5 47.5\n");
}

TEST_CASE("clamped rule renders like the constrained-equal-awards row") {
  std::string report =
      allocate_report(table2_file(), {RuleSpec::pcea(45)}, RenderOptions{3, false});
  CHECK(report.find("rule=pcea:45 L_eff=45 k=1 S0=[0] awards: 10 45 45\n") != std::string::npos);
}

TEST_CASE("exact rendering mode") {
  std::string report =
      allocate_report(table2_file(), {RuleSpec::proportional()}, RenderOptions{3, true});
  CHECK(report.find("awards: 100/13 500/13 700/13") != std::string::npos);
}

TEST_CASE("sweep report annotates the effective baseline") {
  std::string report = sweep_report(table2_file(), {0, 5, 20, 40}, RenderOptions{3, false});
  CHECK(report.find("L=0 L_eff=0 awards: 7.692 38.462 53.846\n") != std::string::npos);
  CHECK(report.find("L=5 L_eff=5 awards: 8.696 38.261 53.043\n") != std::string::npos);
  CHECK(report.find("L=20 L_eff=20 awards: 10 38.75 51.25\n") != std::string::npos);
  CHECK(report.find("L=40 L_eff=40 awards: 10 42.5 47.5\n") != std::string::npos);
  CHECK(report.find("L-monotonicity: pass\n") != std::string::npos);

  std::string clamped = sweep_report(table2_file(), {100}, RenderOptions{3, false});
  CHECK(clamped.find("L=100 L_eff=45 awards: 10 45 45\n") != std::string::npos);
}

TEST_CASE("compare report prints both orderings") {
  std::string report = compare_report(table2_file(), RuleSpec::cea(), RuleSpec::cel(),
                                      RenderOptions{3, false});
  CHECK(report.find("leximin: strictly-better first-diff-index=0\n") != std::string::npos);
  CHECK(report.find("lorenz: strictly-better first-diff-index=0\n") != std::string::npos);
  CHECK(report.find("lorenz-cumulative-a: 10 55 100\n") != std::string::npos);
  CHECK(report.find("lorenz-cumulative-b: 0 40 100\n") != std::string::npos);

  std::string self = compare_report(table2_file(), RuleSpec::pcea(20), RuleSpec::pcea(20),
                                    RenderOptions{3, false});
  CHECK(self.find("leximin: equal\n") != std::string::npos);
  CHECK(self.find("lorenz: equal\n") != std::string::npos);
}

TEST_CASE("path rows include the exact kinks") {
  ProblemFile two;
  two.claims = {50, 100};
  two.estate = 100;
  std::string csv = path_csv(RuleSpec::pcea(25), two.claims, 2, {}, RenderOptions{6, false});
  CHECK(csv.find("estate,award1,award2\n") != std::string::npos);
  CHECK(csv.find("\n50,25,25\n") != std::string::npos);
  CHECK(csv.find("\n100,37.5,62.5\n") != std::string::npos);

  std::string cea_csv = path_csv(RuleSpec::cea(), two.claims, 2, {}, RenderOptions{6, false});
  CHECK(cea_csv.find("\n100,50,50\n") != std::string::npos);
}

TEST_CASE("infeasible equal-awards rows are flagged") {
  ProblemFile f;
  f.claims = {1, 100};
  f.estate = 50;
  std::string report = allocate_report(f, {RuleSpec::equal_awards()}, RenderOptions{3, false});
  CHECK(report.find("rule=equal-awards feasible=false awards: 25 25\n") != std::string::npos);
}

TEST_CASE("the catalog mismatch on composition up surfaces through the report") {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.trials = 40;
  cfg.inner_trials = 8;
  AxiomsRun run = axioms_report(RuleSpec::pcea(20), cfg, Rational(20));
  CHECK(run.has_expectations);
  CHECK(!run.matches);
  CHECK(run.text.find("catalog-diff property=composition-up expected=pass observed=fail") !=
        std::string::npos);
  CHECK(run.text.find("catalog-match: no") != std::string::npos);
}

TEST_CASE("axiom battery report for a catalog rule") {
  GenConfig cfg;
  cfg.seed = 7;
  cfg.trials = 30;
  cfg.inner_trials = 8;
  AxiomsRun run = axioms_report(RuleSpec::proportional(), cfg, std::nullopt);
  CHECK(run.has_expectations);
  CHECK(run.matches);
  CHECK(run.text.find("check=consistency rule=proportional passed=true") != std::string::npos);
  CHECK(run.text.find("catalog-match: yes") != std::string::npos);

  AxiomsRun dual = axioms_report(RuleSpec::pcea_dual(5), cfg, Rational(5));
  CHECK(!dual.has_expectations);
  CHECK(dual.text.find("catalog-match: n/a") != std::string::npos);
}

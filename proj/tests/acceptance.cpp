// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run with no argument for the whole battery, or with a criterion number.

#include "problem_file.hpp"
#include "report.hpp"

#include "claims/axioms.hpp"
#include "claims/inequality.hpp"
#include "claims/paths.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

using namespace claims;
using namespace claims::cli;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void(std::vector<std::string>&)> body;
};

ClaimsProblem table2() { return ClaimsProblem({10, 50, 70}, 100); }

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

/// Suite generator used by the randomized criteria; independent of the
/// checker-internal streams.
struct SuiteGen {
  std::mt19937_64 rng;
  explicit SuiteGen(std::uint64_t seed) : rng(seed) {}

  Rational fraction(int den_max) {
    std::uniform_int_distribution<int> den_d(2, den_max);
    int den = den_d(rng);
    std::uniform_int_distribution<int> num_d(1, den - 1);
    return Rational(num_d(rng), den);
  }

  ClaimsProblem problem(int min_agents, int max_agents) {
    std::uniform_int_distribution<int> n_d(min_agents, max_agents);
    std::uniform_int_distribution<int> num(1, 60);
    std::uniform_int_distribution<int> den(1, 6);
    int n = n_d(rng);
    std::vector<Rational> claims;
    for (int i = 0; i < n; ++i) claims.emplace_back(num(rng), den(rng));
    return ClaimsProblem(claims, sum(claims) * fraction(64));
  }
};

Rational min_claim(const ClaimsProblem& p) {
  Rational m = p.claims().front();
  for (const Rational& c : p.claims()) {
    if (c < m) m = c;
  }
  return m;
}

// --------------------------------------------------------------------------
// 1. Three-agent allocation table, rendered and exact
// --------------------------------------------------------------------------
void criterion1(std::vector<std::string>& failures) {
  ClaimsProblem p = table2();
  struct Row {
    RuleSpec rule;
    std::vector<Rational> exact;
    std::vector<std::string> rendered;
  };
  std::vector<Row> rows = {
      {RuleSpec::proportional(),
       {{100, 13}, {500, 13}, {700, 13}},
       {"7.692", "38.462", "53.846"}},
      {RuleSpec::cea(), {10, 45, 45}, {"10", "45", "45"}},
      {RuleSpec::cel(), {0, 40, 60}, {"0", "40", "60"}},
      {RuleSpec::alpha_min(), {10, 38, 52}, {"10", "38", "52"}},
      {RuleSpec::pcea(5), {{200, 23}, {880, 23}, {1220, 23}}, {"8.696", "38.261", "53.043"}},
      {RuleSpec::pcea(20), {10, {155, 4}, {205, 4}}, {"10", "38.75", "51.25"}},
      {RuleSpec::pcea(40), {10, {85, 2}, {95, 2}}, {"10", "42.5", "47.5"}},
  };
  for (const Row& row : rows) {
    AwardVector x = allocate(row.rule, p);
    expect(failures, x.values == row.exact, row.rule.name() + ": exact values differ");
    for (std::size_t i = 0; i < 3; ++i) {
      std::string cell = decimal_string(x.values[i], 3);
      expect(failures, cell == row.rendered[i],
             row.rule.name() + " agent " + std::to_string(i + 1) + ": rendered '" + cell +
                 "', table says '" + row.rendered[i] + "'");
    }
  }
}

// --------------------------------------------------------------------------
// 2. Two-agent example
// --------------------------------------------------------------------------
void criterion2(std::vector<std::string>& failures) {
  ClaimsProblem p({50, 100}, 100);
  expect(failures,
         allocate(RuleSpec::pcea(25), p).values == std::vector<Rational>{{75, 2}, {125, 2}},
         "compromise division at L=25 is not (37.5, 62.5)");
  expect(failures,
         allocate(RuleSpec::proportional(), p).values ==
             std::vector<Rational>{{100, 3}, {200, 3}},
         "proportional division is not (100/3, 200/3)");
  expect(failures, allocate(RuleSpec::cea(), p).values == std::vector<Rational>{50, 50},
         "constrained-equal-awards division is not (50, 50)");
}

// --------------------------------------------------------------------------
// 3. Waterlines
// --------------------------------------------------------------------------
void criterion3(std::vector<std::string>& failures) {
  expect(failures, compute_lambda(table2()).value == 45, "awards waterline is not 45");
  expect(failures, compute_mu(table2()).value == 10, "losses waterline is not 10");
  expect(failures, allocate(RuleSpec::cel(), table2()).values == std::vector<Rational>{0, 40, 60},
         "equal-losses division is not (0, 40, 60)");
}

// --------------------------------------------------------------------------
// 4. Identity chain on 1,000 seeded problems
// --------------------------------------------------------------------------
void criterion4(std::vector<std::string>& failures) {
  SuiteGen gen(0x1DE57A17);
  std::uniform_int_distribution<int> num(0, 90);
  std::uniform_int_distribution<int> den(1, 4);
  for (int t = 0; t < 1000 && failures.empty(); ++t) {
    ClaimsProblem p = gen.problem(1, 8);
    Rational lambda = compute_lambda(p).value;
    Rational L(num(gen.rng), den(gen.rng));

    expect(failures, allocate(RuleSpec::pcea(0), p) == allocate(RuleSpec::proportional(), p),
           "zero baseline differs from proportional at trial " + std::to_string(t));
    expect(failures, allocate(RuleSpec::pcea(lambda), p) == allocate(RuleSpec::cea(), p),
           "baseline at the waterline differs from constrained equal awards");
    expect(failures, allocate(RuleSpec::pcea(lambda + 3), p) == allocate(RuleSpec::cea(), p),
           "baseline above the waterline differs from constrained equal awards");

    Rational c1 = min_claim(p);
    Rational share = p.estate() / Rational(static_cast<unsigned>(p.size()));
    if (c1 < share) {
      expect(failures, allocate(RuleSpec::alpha_min(), p) == allocate(RuleSpec::pcea(c1), p),
             "endogenous baseline differs from the family at the smallest claim");
    }
    expect(failures, young_eval(p, L) == allocate(RuleSpec::pcea(L), p),
           "parametric route differs from the direct engine");
  }
}

// --------------------------------------------------------------------------
// 5. Award-side characterization oracle
// --------------------------------------------------------------------------
void criterion5(std::vector<std::string>& failures) {
  GenConfig cfg;
  cfg.seed = 0xC0A1A57;
  cfg.trials = 1000;
  cfg.inner_trials = 200;
  Rational L = 20;

  std::vector<Verdict> verdicts = theorem1_oracle(cfg, L);
  expect(failures, verdicts[0].passed, "family fails the reallocation axiom: " +
                                           to_string(verdicts[0]));
  expect(failures, verdicts[1].passed, "family fails the award floor: " + to_string(verdicts[1]));
  expect(failures, !verdicts[2].passed && verdicts[2].witness.has_value(),
         "proportional did not produce an award-floor witness");
  expect(failures, !verdicts[3].passed && verdicts[3].witness.has_value(),
         "constrained equal awards did not produce a reallocation witness");
  if (verdicts[2].witness) {
    expect(failures, replay(verdicts[2]), "award-floor witness does not replay");
  }
  if (verdicts[3].witness) {
    expect(failures, replay(verdicts[3]), "reallocation witness does not replay");
  }

  // The canonical four-agent counterexample replays with exact coalition sums.
  ClaimsProblem four({10, 40, 50, 60}, 120);
  auto detail = nar_violation(RuleSpec::cea(), four, {2, 3}, {20, 90}, 20);
  expect(failures, detail.has_value(), "four-agent counterexample does not violate");
  auto sums = nar_coalition_sums(RuleSpec::cea(), four, {2, 3}, {20, 90});
  expect(failures, sums.first == Rational(220, 3) && sums.second == 70,
         "four-agent coalition sums are " + exact_string(sums.first) + " -> " +
             exact_string(sums.second) + ", not 220/3 -> 70");
}

// --------------------------------------------------------------------------
// 6. Loss-side characterization oracle and duality identities
// --------------------------------------------------------------------------
void criterion6(std::vector<std::string>& failures) {
  GenConfig cfg;
  cfg.seed = 0xD0A1;
  cfg.trials = 1000;
  cfg.inner_trials = 50;
  for (const Verdict& v : theorem2_oracle(cfg, 20)) {
    expect(failures, v.passed, v.axiom + " failed: " + to_string(v));
  }
}

// --------------------------------------------------------------------------
// 7. Catalog property matrix
// --------------------------------------------------------------------------
void criterion7(std::vector<std::string>& failures) {
  GenConfig cfg;
  cfg.seed = 0x7AB1E1;
  cfg.trials = 120;
  cfg.inner_trials = 12;

  // The stated inconsistency witness for the endogenous-baseline rule.
  auto witness = consistency_violation(RuleSpec::alpha_min(), table2(), {1, 2});
  expect(failures, witness.has_value(), "stated inconsistency witness does not violate");
  expect(failures,
         allocate(RuleSpec::alpha_min(), ClaimsProblem({50, 70}, 90)).values ==
             std::vector<Rational>{45, 45},
         "reduced pair problem does not yield (45, 45)");
  expect(failures, allocate(RuleSpec::alpha_min(), table2()).values ==
                       std::vector<Rational>{10, 38, 52},
         "full problem does not yield (10, 38, 52)");
  Verdict anchored = check_consistency1(RuleSpec::alpha_min(), cfg);
  expect(failures, anchored.passed,
         "anchored consistency fails for the endogenous baseline: " + to_string(anchored));

  for (const RuleSpec& rule : {RuleSpec::proportional(), RuleSpec::cea(), RuleSpec::alpha_min(),
                               RuleSpec::pcea(20)}) {
    std::optional<Rational> L;
    if (rule.has_param()) L = rule.param_L();
    std::vector<Verdict> battery = run_battery(rule, cfg, L);
    for (const ExpectationDiff& diff : compare_with_catalog(rule, battery)) {
      expect(failures, false,
             rule.name() + " " + std::string(property_name(diff.property)) + ": expected " +
                 (diff.expected ? "pass" : "fail") + ", observed " +
                 (diff.observed ? "pass" : "fail"));
      for (const Verdict& v : battery) {
        if (v.axiom == property_name(diff.property) && v.witness) {
          expect(failures, false, "  " + to_string(v));
        }
      }
    }
    // Every expected-"no" cell must be backed by a concrete witness that
    // replays to the violation.
    auto expected = catalog_expectations(rule);
    for (const auto& [property, want] : *expected) {
      if (want) continue;
      for (const Verdict& v : battery) {
        if (v.axiom != property_name(property)) continue;
        expect(failures, !v.passed && v.witness.has_value() && replay(v),
               rule.name() + " " + property_name(property) +
                   ": missing or non-replaying witness");
      }
    }
  }
}

// --------------------------------------------------------------------------
// 8. Lorenz/leximin monotonicity in the baseline
// --------------------------------------------------------------------------
void criterion8(std::vector<std::string>& failures) {
  SuiteGen gen(0x10E327);
  int strict_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    ClaimsProblem p = gen.problem(2, 8);
    Rational lambda = compute_lambda(p).value;
    std::vector<Rational> grid = {0, lambda / 4, lambda / 2, lambda * Rational(3, 4), lambda};
    Verdict v = verify_L_monotonicity(p, grid);
    if (!v.passed) {
      expect(failures, false,
             "monotonicity fails at trial " + std::to_string(t) + ": " + to_string(v));
      break;
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      if (grid[i] != grid[i + 1] && strictness_expected(p, grid[i], grid[i + 1])) ++strict_pairs;
    }
  }
  expect(failures, strict_pairs > 0, "no strict adjacent pair was exercised");
}

// --------------------------------------------------------------------------
// 9. Estate-reduction identity through the clamp
// --------------------------------------------------------------------------
void criterion9(std::vector<std::string>& failures) {
  ClaimsProblem p = table2();
  Rational reduced_lambda = compute_lambda(ClaimsProblem({10, 50, 70}, 35)).value;
  expect(failures, reduced_lambda == Rational(25, 2),
         "reduced waterline is " + exact_string(reduced_lambda) + ", not 12.5");
  expect(failures, !composition_down_violation(RuleSpec::pcea(40), p, 35).has_value(),
         "two-stage estate reduction differs from the direct division");
  expect(failures,
         allocate(RuleSpec::pcea(40), ClaimsProblem({10, 50, 70}, 35)).values ==
             std::vector<Rational>{10, {25, 2}, {25, 2}},
         "direct division at the reduced estate is not (10, 12.5, 12.5)");
}

// --------------------------------------------------------------------------
// 10. Award-path data
// --------------------------------------------------------------------------
void criterion10(std::vector<std::string>& failures) {
  std::string csv = path_csv(RuleSpec::pcea(25), {50, 100}, 8, {}, RenderOptions{6, false});
  expect(failures, csv.find("\n50,25,25\n") != std::string::npos,
         "compromise path misses the kink row 50,25,25");
  expect(failures, csv.find("\n100,37.5,62.5\n") != std::string::npos,
         "compromise path misses the kink row 100,37.5,62.5");

  std::string cea_csv = path_csv(RuleSpec::cea(), {50, 100}, 8, {}, RenderOptions{6, false});
  expect(failures, cea_csv.find("\n100,50,50\n") != std::string::npos,
         "equal-awards path misses the kink row 100,50,50");

  std::string tree_csv = path_csv(RuleSpec::pcea(30), {10, 50}, 8, {}, RenderOptions{6, false});
  expect(failures, tree_csv.find("\n20,10,10\n") != std::string::npos,
         "tree path misses the kink row 20,10,10");

  for (const RuleSpec& rule : {RuleSpec::pcea(25), RuleSpec::cea(), RuleSpec::cel(),
                               RuleSpec::proportional(), RuleSpec::alpha_min()}) {
    PathTrace trace = trace_path(rule, {10, 50, 70}, 32);
    for (std::size_t i = 1; i < trace.samples.size() && failures.size() < 8; ++i) {
      for (std::size_t a = 0; a < trace.claims.size(); ++a) {
        expect(failures, trace.samples[i].awards[a] >= trace.samples[i - 1].awards[a],
               rule.name() + " trace is not monotone in the estate");
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "three-agent allocation table (rendered + exact)", criterion1},
      {2, "two-agent allocations", criterion2},
      {3, "waterlines", criterion3},
      {4, "identity chain on 1000 seeded problems", criterion4},
      {5, "award-side characterization oracle", criterion5},
      {6, "loss-side characterization oracle and duality", criterion6},
      {7, "catalog property matrix", criterion7},
      {8, "baseline monotonicity (200 problems x 5-point grids)", criterion8},
      {9, "estate-reduction identity through the clamp", criterion9},
      {10, "award-path data", criterion10},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    std::vector<std::string> failures;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << c.number << ": " << (failures.empty() ? "PASS" : "FAIL") << " — "
              << c.title << " (" << ms << " ms)\n";
    for (const std::string& f : failures) std::cout << "    " << f << '\n';
    if (!failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

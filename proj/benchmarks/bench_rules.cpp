#include "claims/axioms.hpp"
#include "claims/rules.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace claims;

namespace {

ClaimsProblem random_problem(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> claims;
  for (int i = 0; i < n; ++i) claims.emplace_back(num(rng), den(rng));
  std::uniform_int_distribution<int> frac(1, 63);
  return ClaimsProblem(claims, sum(claims) * Rational(frac(rng), 64));
}

void BM_ComputeLambda(benchmark::State& state) {
  std::mt19937_64 rng(42);
  ClaimsProblem p = random_problem(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_lambda(p));
  }
}
BENCHMARK(BM_ComputeLambda)->Arg(4)->Arg(8)->Arg(64);

void BM_AllocateCompromise(benchmark::State& state) {
  std::mt19937_64 rng(43);
  ClaimsProblem p = random_problem(rng, static_cast<int>(state.range(0)));
  RuleSpec rule = RuleSpec::pcea(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(allocate(rule, p));
  }
}
BENCHMARK(BM_AllocateCompromise)->Arg(4)->Arg(8)->Arg(64);

void BM_AllocateDual(benchmark::State& state) {
  std::mt19937_64 rng(44);
  ClaimsProblem p = random_problem(rng, static_cast<int>(state.range(0)));
  RuleSpec rule = RuleSpec::pcea_dual(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(allocate(rule, p));
  }
}
BENCHMARK(BM_AllocateDual)->Arg(4)->Arg(8);

void BM_NarChecker(benchmark::State& state) {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.trials = static_cast<int>(state.range(0));
  cfg.inner_trials = 10;
  RuleSpec rule = RuleSpec::pcea(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_nar(rule, cfg, 20));
  }
}
BENCHMARK(BM_NarChecker)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();

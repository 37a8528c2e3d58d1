#include <benchmark/benchmark.h>

#include <random>

#include "setpoly/setpoly.hpp"

using namespace setpoly;

namespace {

SetPolynomial sample_poly(std::size_t D) {
  SetPolynomial P = SetPolynomial::full_power(D);
  for (TermIndex alpha = 1; alpha < full_index(D); ++alpha) {
    const std::size_t arity = D - index_size(alpha);
    std::vector<Tuple> rows;
    for (Symbol s = 1; s <= 3; ++s) rows.push_back(Tuple(arity, 100 + s));
    P.set_coeff(alpha, FinSet(arity, rows));
  }
  return P;
}

FinSet window(std::size_t k) {
  std::vector<Symbol> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Symbol>(i + 1);
  return FinSet::from_flat(1, s);
}

void BM_Evaluate(benchmark::State& state) {
  const auto D = static_cast<std::size_t>(state.range(0));
  const SetPolynomial P = sample_poly(D);
  const FinSet n = window(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(P, n));
}
BENCHMARK(BM_Evaluate)->Args({2, 4})->Args({2, 8})->Args({3, 6})->Args({4, 5});

void BM_Shift(benchmark::State& state) {
  const SetPolynomial P = sample_poly(static_cast<std::size_t>(state.range(0)));
  const FinSet m = FinSet::symbols({7, 8, 9});
  for (auto _ : state) benchmark::DoNotOptimize(shift(P, m));
}
BENCHMARK(BM_Shift)->Arg(2)->Arg(3)->Arg(4);

void BM_BruteForceWitness(benchmark::State& state) {
  SetPolynomial P(2);
  P.set_coeff(index_from_list({1}, 2), FinSet::symbols({500}));
  const System A(2, {P});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RecurrenceRequest req{A, FinSet::symbols({500}), {}, std::nullopt};
    benchmark::DoNotOptimize(brute_force_witness(req, ColoringOracle::seeded(static_cast<int>(state.range(0)), seed++)));
  }
}
BENCHMARK(BM_BruteForceWitness)->Arg(2)->Arg(3);

void BM_SquareDifference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(square_difference_min_N(static_cast<int>(state.range(0)), 60));
}
BENCHMARK(BM_SquareDifference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RecoverPhi(benchmark::State& state) {
  const auto W = static_cast<std::size_t>(state.range(0));
  const std::size_t d = 3;
  std::mt19937_64 rng(1);
  PhiTable phi = PhiTable::zero(d, window(W), 2);
  for (auto& [mask, v] : phi.values) v = {static_cast<std::int64_t>(rng() % 19) - 9, 1};
  const LatticeMap P = lattice_from_phi(phi);
  for (auto _ : state) benchmark::DoNotOptimize(recover_phi(P, d));
}
BENCHMARK(BM_RecoverPhi)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

#include "brim/invariants.hpp"
#include "brim/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

brim::Ideal square_ideal(long long a) {
  const brim::Ring ring = brim::Ring::power_series({"x", "y"});
  return brim::Ideal(brim::MonomialIdeal::make(
      ring.monomial(), {{a, 0}, {0, a}, {a / 2, a / 2 + 1}}));
}

void bench_colength(benchmark::State& state) {
  const brim::Ideal ideal = square_ideal(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ideal.colength());
}
BENCHMARK(bench_colength)->Arg(8)->Arg(32)->Arg(128);

void bench_power(benchmark::State& state) {
  const brim::Ideal ideal = square_ideal(6);
  for (auto _ : state) benchmark::DoNotOptimize(ideal.power(state.range(0)));
}
BENCHMARK(bench_power)->Arg(4)->Arg(8)->Arg(16);

void bench_bf_value(benchmark::State& state) {
  const brim::Ring ring = brim::Ring::power_series({"x", "y"});
  const brim::Ideal I(brim::MonomialIdeal::make(ring.monomial(), {{2, 0}, {1, 1}, {0, 2}}));
  const brim::Ideal J(brim::MonomialIdeal::make(ring.monomial(), {{3, 0}, {0, 2}, {1, 1}}));
  const auto module = brim::DirectSumModule::make({I, J});
  for (auto _ : state) benchmark::DoNotOptimize(brim::bf_value(module, state.range(0)));
}
BENCHMARK(bench_bf_value)->Arg(4)->Arg(8)->Arg(12);

void bench_module_invariants(benchmark::State& state) {
  const brim::Ring ring = brim::Ring::power_series({"x", "y"});
  const brim::Ideal I(brim::MonomialIdeal::make(ring.monomial(), {{2, 0}, {1, 1}, {0, 2}}));
  const brim::Ideal J(brim::MonomialIdeal::make(ring.monomial(), {{3, 0}, {0, 3}, {2, 1}}));
  const auto module = brim::DirectSumModule::make({I, J});
  for (auto _ : state) benchmark::DoNotOptimize(brim::module_invariants(module));
}
BENCHMARK(bench_module_invariants);

void bench_semigroup_colength(benchmark::State& state) {
  const brim::Ring ring = brim::Ring::semigroup({7, 15, 17, 33});
  const brim::Ideal I(brim::SemigroupIdeal::make(ring.semigroup_ring(), {7, 17, 33}));
  const brim::Ideal power = I.power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power.colength());
}
BENCHMARK(bench_semigroup_colength)->Arg(2)->Arg(8)->Arg(16);

void bench_fit(benchmark::State& state) {
  const brim::Ring ring = brim::Ring::power_series({"x", "y"});
  const brim::Ideal I(brim::MonomialIdeal::make(ring.monomial(), {{3, 0}, {1, 1}, {0, 4}}));
  brim::ProductCache cache({I});
  brim::IntegerSequenceWindow window;
  window.n_lo = 0;
  for (long long n = 0; n <= 24; ++n) window.values.push_back(cache.colength_at({n}));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        brim::fit_polynomial(window, 2, 3, brim::Convention::hilbert_samuel));
}
BENCHMARK(bench_fit);

}  // namespace

BENCHMARK_MAIN();

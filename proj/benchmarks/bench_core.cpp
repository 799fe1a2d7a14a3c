#include <benchmark/benchmark.h>

#include "bsvy/field.hpp"
#include "bsvy/functional.hpp"
#include "bsvy/polynomial.hpp"
#include "bsvy/spaces.hpp"

namespace {

bsvy::FunctionalConfig config_1d() {
  bsvy::FunctionalConfig c;
  c.k = 1;
  c.q = 2.0;
  c.gamma = 1.0;
  c.space = bsvy::Lebesgue{2.0};
  c.threads = 1;
  return c;
}

void BM_InnerIntegrals1D(benchmark::State& st) {
  const auto f = bsvy::make_gaussian_bump(1, 1.0);
  auto c = config_1d();
  c.k = static_cast<int>(st.range(0));
  const auto lam = c.lambdas.values();
  for (auto _ : st) benchmark::DoNotOptimize(bsvy::inner_integrals(f, bsvy::Point{0.3}, lam, c));
}
BENCHMARK(BM_InnerIntegrals1D)->Arg(1)->Arg(2);

void BM_InnerIntegrals2D(benchmark::State& st) {
  const auto f = bsvy::make_gaussian_bump(2, 1.0);
  auto c = config_1d();
  const auto lam = c.lambdas.values();
  for (auto _ : st) benchmark::DoNotOptimize(bsvy::inner_integrals(f, bsvy::Point{0.3, -0.2}, lam, c));
}
BENCHMARK(BM_InnerIntegrals2D);

void BM_SpaceNorm(benchmark::State& st) {
  const auto f = bsvy::make_gaussian_bump(2, 0.5);
  const auto g = bsvy::sample(f, bsvy::GridSpec{2, 2.0, static_cast<int>(st.range(0))});
  const bsvy::SpaceSpec spaces[] = {bsvy::Lebesgue{2.0}, bsvy::Lorentz{2.0, 3.0}, bsvy::Morrey{3.0, 2.0}};
  for (auto _ : st)
    for (const auto& s : spaces) benchmark::DoNotOptimize(bsvy::space_norm(s, g));
}
BENCHMARK(BM_SpaceNorm)->Arg(64)->Arg(128);

void BM_LocalApproximation(benchmark::State& st) {
  const auto f = bsvy::make_gaussian_bump(2, 0.7);
  const bsvy::Region q = bsvy::Cube{2, bsvy::Point{-0.5, -0.5}, 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(bsvy::local_approximation(f, q, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_LocalApproximation)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cmaf/asymptotics.hpp"
#include "cmaf/background.hpp"
#include "cmaf/bondi.hpp"
#include "cmaf/flow.hpp"
#include "cmaf/sphere.hpp"

namespace {

void BM_SolveRadius(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    s += 0.37;
    if (s > 90.0) s = 0.1;
    benchmark::DoNotOptimize(cmaf::solve_radius(s, 0.4));
  }
}
BENCHMARK(BM_SolveRadius);

void BM_SphericalRoundTrip(benchmark::State& state) {
  const int l_max = static_cast<int>(state.range(0));
  const auto grid = cmaf::SphereGrid::for_degree(l_max);
  cmaf::SpectralField a(l_max);
  for (std::size_t k = 0; k < a.coeff.size(); ++k) a.coeff[k] = 1.0 / (1.0 + k);
  for (auto _ : state) {
    auto field = cmaf::synthesize(a, grid);
    auto back = cmaf::analyze(field, l_max);
    benchmark::DoNotOptimize(back.coeff.data());
  }
  state.SetComplexityN(l_max);
}
BENCHMARK(BM_SphericalRoundTrip)->RangeMultiplier(2)->Range(8, 32)->Complexity();

void BM_EvolveMode(benchmark::State& state) {
  const int n_steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto traj = cmaf::evolve_mode(cmaf::PerturbationKind::case_i, 2, 10.0, n_steps);
    benchmark::DoNotOptimize(traj.back().delta_f);
  }
}
BENCHMARK(BM_EvolveMode)->RangeMultiplier(4)->Range(256, 16384);

void BM_ResidualVector(benchmark::State& state) {
  const auto st = cmaf::closed_form_state(cmaf::PerturbationKind::case_ii, 4, 5.0);
  for (auto _ : state) {
    auto res = cmaf::basic_equation_residuals(cmaf::PerturbationKind::case_ii, 4, st);
    benchmark::DoNotOptimize(res.res_gauss);
  }
}
BENCHMARK(BM_ResidualVector);

void BM_Spectrum(benchmark::State& state) {
  for (auto _ : state) {
    auto spec = cmaf::spectrum(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(spec.data());
  }
}
BENCHMARK(BM_Spectrum)->Arg(16)->Arg(64);

void BM_MomentumResponse(benchmark::State& state) {
  const auto grid = cmaf::SphereGrid::for_degree(8);
  for (auto _ : state) {
    auto resp = cmaf::momentum_surjectivity_check(grid);
    benchmark::DoNotOptimize(resp.rank);
  }
}
BENCHMARK(BM_MomentumResponse);

}  // namespace

BENCHMARK_MAIN();

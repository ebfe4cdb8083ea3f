#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "wpdid/estimator.hpp"
#include "wpdid/identifiability.hpp"
#include "wpdid/phasewrap.hpp"
#include "wpdid/simulator.hpp"

namespace {

using namespace wpdid;

SensorLayout layout_b() {
  return make_layout(std::vector<Rational>{Rational(0), Rational(18, 5), Rational(81, 10)});
}

SensorLayout wide_layout(int n) {
  std::vector<Rational> pos;
  for (int k = 0; k < n; ++k) pos.emplace_back(k * k + 3 * k, 10);
  return make_layout(pos);
}

void BM_CheckIdentifiability(benchmark::State& state) {
  const auto layout = wide_layout(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_identifiability(layout));
}
BENCHMARK(BM_CheckIdentifiability)->Arg(3)->Arg(8)->Arg(16);

void BM_CheckIdentifiabilityFloat(benchmark::State& state) {
  const auto layout = make_layout(std::vector<double>{0.0, 3.6, 8.1, 11.7, 20.25});
  for (auto _ : state) benchmark::DoNotOptimize(check_identifiability(layout));
}
BENCHMARK(BM_CheckIdentifiabilityFloat);

void BM_BuildWpdp(benchmark::State& state) {
  const auto d = pair_distances(layout_b());
  for (auto _ : state) benchmark::DoNotOptimize(build_wpdp(d, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildWpdp)->Arg(1001)->Arg(4001)->Arg(16001);

void BM_MatchDoa(benchmark::State& state) {
  const auto d = pair_distances(layout_b());
  const auto grid = build_wpdp(d, static_cast<std::size_t>(state.range(0)));
  const auto psi = wrapped_vector(d, std::asin(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(match_doa(psi, grid));
}
BENCHMARK(BM_MatchDoa)->Arg(1001)->Arg(4001)->Arg(16001);

void BM_CollisionOracle(benchmark::State& state) {
  const auto d = pair_distances(layout_b());
  const auto grid = build_wpdp(d, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(collision_oracle(grid));
}
BENCHMARK(BM_CollisionOracle)->Arg(1001)->Arg(4001)->Arg(16001);

void BM_MonteCarlo(benchmark::State& state) {
  const auto layout = layout_b();
  const std::vector<double> snr{10.0};
  MonteCarloOptions options;
  options.trials = 100;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_rmse(layout, std::asin(0.3), snr, options));
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

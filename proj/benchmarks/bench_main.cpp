#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "bubble/equilibrium.hpp"
#include "bubble/geometry.hpp"
#include "bubble/loss.hpp"
#include "bubble/suite.hpp"
#include "bubble/trainer.hpp"
#include "bubble/weak_form.hpp"

using namespace bubble;

namespace {

void BM_CurvatureExtension(benchmark::State& state) {
  double t = 0.3, acc = 0.0;
  for (auto _ : state) {
    acc += geometry::mean_curvature_extension(1.0 + 0.2 * std::sin(t), 0.2 * std::cos(t), -0.2 * std::sin(t), t);
    t = t < 3.0 ? t + 1e-3 : 0.3;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_CurvatureExtension);

void BM_CurvatureForms(benchmark::State& state) {
  double t = 0.3, acc = 0.0;
  for (auto _ : state) {
    acc += geometry::mean_curvature_forms(1.0 + 0.2 * std::sin(t), 0.2 * std::cos(t), -0.2 * std::sin(t), t);
    t = t < 3.0 ? t + 1e-3 : 0.3;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_CurvatureForms);

void BM_SolveHornTorus(benchmark::State& state) {
  const auto params = PhysicalParams::water_air();
  double M = 1e-7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_horn_torus(params, M).C);
    M = M < 1e-3 ? M * 1.1 : 1e-7;
  }
}
BENCHMARK(BM_SolveHornTorus);

void BM_LossAndGradient(benchmark::State& state) {
  pinn::TrainConfig cfg;
  cfg.N = static_cast<std::size_t>(state.range(0));
  const auto net = pinn::initial_network(cfg);
  pinn::LossWorkspace ws(cfg);
  Eigen::VectorXd grad(static_cast<Eigen::Index>(net.parameter_count()));
  for (auto _ : state) benchmark::DoNotOptimize(ws.evaluate(net, &grad).total);
}
BENCHMARK(BM_LossAndGradient)->Arg(50)->Arg(200);

void BM_WeakFormMomentum(benchmark::State& state) {
  const auto params = PhysicalParams::water_air();
  const double C = horn_torus_from_volume(params, 5e-4).C;
  const auto z = verification::standard_vector_family(C).front();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verification::weak_form_momentum(z, params, C, {n, n, 32}).value);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n * 32));
}
BENCHMARK(BM_WeakFormMomentum)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

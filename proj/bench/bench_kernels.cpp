#include <cmath>
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "hslab/kernels.hpp"
#include "hslab/minimizer.hpp"
#include "hslab/thresholds.hpp"

using namespace hslab;

namespace {

std::vector<double> graded_nodes(int cells) {
  std::vector<double> r(cells + 1);
  for (int i = 0; i <= cells; ++i) r[i] = std::pow(double(i) / cells, 2.0);
  return r;
}

kernels::CellQuadrature quadrature_for(int cells) {
  const auto nodes = graded_nodes(cells);
  return kernels::build_cell_quadrature(nodes, [](double r) { return r * r * r; }, 16);
}

std::vector<double> profile(int cells) {
  std::vector<double> u(cells + 1);
  for (int i = 0; i <= cells; ++i) u[i] = 1.0 / (1.0 + 10.0 * i / cells);
  return u;
}

template <bool Serial>
void BM_PowerSumGradient(benchmark::State& state) {
  const int cells = int(state.range(0));
  const auto q = quadrature_for(cells);
  const auto u = profile(cells);
  std::vector<double> g(u.size());
  for (auto _ : state) {
    const double v = Serial ? kernels::power_sum_gradient_serial(q, u, 8.0 / 3.0, g)
                            : kernels::power_sum_gradient(q, u, 8.0 / 3.0, g);
    benchmark::DoNotOptimize(v);
  }
}

template <bool Serial>
void BM_ElementStiffness(benchmark::State& state) {
  const int cells = int(state.range(0));
  const auto nodes = graded_nodes(cells);
  const auto q = quadrature_for(cells);
  for (auto _ : state) {
    auto e = Serial ? kernels::element_stiffness_serial(q, nodes) : kernels::element_stiffness(q, nodes);
    benchmark::DoNotOptimize(e);
  }
}

void BM_MinimizeS4(benchmark::State& state) {
  const ModelManifold s4 = make_manifold(ManifoldKind::Sphere, 1.0, 4, std::numbers::pi);
  const QuadraticForms f = assemble_on(s4, {int(state.range(0)), 2.0}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_quotient(f, -1.0).mu_upper);
}

}  // namespace

BENCHMARK(BM_PowerSumGradient<true>)->Name("power_sum_gradient/serial")->Arg(512)->Arg(4096);
BENCHMARK(BM_PowerSumGradient<false>)->Name("power_sum_gradient/parallel")->Arg(512)->Arg(4096);
BENCHMARK(BM_ElementStiffness<true>)->Name("element_stiffness/serial")->Arg(512)->Arg(4096);
BENCHMARK(BM_ElementStiffness<false>)->Name("element_stiffness/parallel")->Arg(512)->Arg(4096);
BENCHMARK(BM_MinimizeS4)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

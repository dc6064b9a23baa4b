#include <benchmark/benchmark.h>

#include <cmath>

#include "fracpow/assembly.hpp"
#include "fracpow/linsolve.hpp"
#include "fracpow/oracle.hpp"
#include "fracpow/sincquad.hpp"

using namespace fracpow;

static void BM_Assemble(benchmark::State& state) {
  const Mesh mesh = build_uniform_mesh(static_cast<int>(state.range(0)));
  const auto coeffs = convection_diffusion_form(1.0);
  for (auto _ : state) {
    auto sys = assemble(mesh, coeffs);
    benchmark::DoNotOptimize(sys.form.nnz());
  }
  state.SetComplexityN(mesh.cell_count());
}
BENCHMARK(BM_Assemble)->DenseRange(3, 6)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_ShiftedSolve(benchmark::State& state) {
  const auto sys = assemble(build_uniform_mesh(5), convection_diffusion_form(10.0));
  const auto b = assemble_load(sys.mesh, [](double, double) { return 1.0; });
  const double mu = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto res = solve_shifted(sys, mu, b, 1e-10);
    benchmark::DoNotOptimize(res.x.data());
  }
}
BENCHMARK(BM_ShiftedSolve)->DenseRange(-2, 4, 2)->Unit(benchmark::kMillisecond);

static void BM_FractionalInverse(benchmark::State& state) {
  const auto sys = assemble(build_uniform_mesh(4), convection_diffusion_form(1.0));
  const auto sol = manufactured_solution(0.5, 1.0);
  const auto load = assemble_load(sys.mesh, sol.f);
  const auto rule = build_rule_balanced(0.5, 1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto res = apply_fractional_inverse(sys, rule, load, 1e-10);
    benchmark::DoNotOptimize(res.u.values.data());
  }
  state.counters["nodes"] = static_cast<double>(rule.node_count());
}
BENCHMARK(BM_FractionalInverse)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

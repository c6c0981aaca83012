// Microbenchmarks for the hot paths: polynomial evaluation, residual
// evaluation, full spectrum scans and one shooting integration. Useful as a
// regression baseline when touching the scan or the recurrences.

#include <benchmark/benchmark.h>

#include "kgosc/ode_oracle.hpp"
#include "kgosc/spectrum.hpp"

namespace {

using namespace kgosc;

PhProblem ph_problem() {
  return PhProblem{SpacetimeParams(0.8, 1.0), FieldParams(1.0, 1.0, 0.2), CouplingSpec(1.0, 1.0),
                   PseudoharmonicSpec(1.0, 1.0, 1.0)};
}

CornellProblem cornell_problem() {
  return CornellProblem{SpacetimeParams(0.8, 1.0), FieldParams(1.0, 1.0, 0.2),
                        CouplingSpec(1.0, 1.0), CornellSpec(1.0, 1.0, 0.5, 0.1)};
}

const StateLabel& state() {
  static const StateLabel s(2, 1, 1.0, 2.0);
  return s;
}

void BM_Laguerre(benchmark::State& bs) {
  const LaguerreOrder order(static_cast<int>(bs.range(0)), 3.7);
  double x = 0.0;
  for (auto _ : bs) {
    x += 1e-3;
    benchmark::DoNotOptimize(laguerre(order, x));
  }
}
BENCHMARK(BM_Laguerre)->Arg(2)->Arg(10)->Arg(50);

void BM_PhResidual(benchmark::State& bs) {
  const PhProblem problem = ph_problem();
  double e = 5.0;
  for (auto _ : bs) {
    e += 1e-6;
    benchmark::DoNotOptimize(ph_residual(e, problem, state()));
  }
}
BENCHMARK(BM_PhResidual);

void BM_CornellResidual(benchmark::State& bs) {
  const CornellProblem problem = cornell_problem();
  double e = 1.5;
  for (auto _ : bs) {
    e += 1e-6;
    benchmark::DoNotOptimize(cornell_residual(e, problem, state()));
  }
}
BENCHMARK(BM_CornellResidual);

void BM_PhSolve(benchmark::State& bs) {
  const PhProblem problem = ph_problem();
  for (auto _ : bs) benchmark::DoNotOptimize(ph_solve(problem, state(), Branch::positive));
}
BENCHMARK(BM_PhSolve);

void BM_CornellSolve(benchmark::State& bs) {
  const CornellProblem problem = cornell_problem();
  for (auto _ : bs) benchmark::DoNotOptimize(cornell_solve(problem, state(), Branch::both));
}
BENCHMARK(BM_CornellSolve);

void BM_Shoot(benchmark::State& bs) {
  const Problem problem = ph_problem();
  RadialGrid grid;
  grid.points = static_cast<int>(bs.range(0));
  for (auto _ : bs) benchmark::DoNotOptimize(shoot(9.159, problem, state(), grid));
}
BENCHMARK(BM_Shoot)->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();

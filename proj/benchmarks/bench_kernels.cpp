#include <benchmark/benchmark.h>

#include "shocklab/energy_diag.hpp"
#include "shocklab/gas_model.hpp"
#include "shocklab/grid_fields.hpp"
#include "shocklab/profile.hpp"
#include "shocklab/solver3d.hpp"
#include "shocklab/wave_tracking.hpp"

namespace {

using namespace shocklab;

struct Fixture {
  GasParams gas;
  ShockConnection conn = solve_hugoniot(gas, 1.0, 0.1);
  ProfileTable table = build_profile(gas, conn);
  HalfSpaceGrid grid;
  BoundarySpec bc;
  State state;

  Fixture(int n1, int n2, int n3) : grid(make_grid(50.0, n1, n2, n3)) {
    bc = make_boundary(grid, conn);
    PerturbationSpec pert;
    pert.center = 6.0;
    pert.halfwidth = 2.0;
    state = init_state(grid, table, solve_shift(pert.zero_mass, table).alpha, pert);
    apply_navier_bc(state, bc, grid);
  }
};

void BM_Rhs(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)),
            static_cast<int>(st.range(1)));
  Tendency out = make_tendency(f.grid);
  for (auto _ : st) {
    rhs(f.state, f.bc, f.gas, f.grid, out);
    benchmark::DoNotOptimize(out.d_rho.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(f.grid.interior_size()));
}
BENCHMARK(BM_Rhs)->Args({400, 1})->Args({128, 8})->Args({400, 16})->Unit(benchmark::kMillisecond);

void BM_Step(benchmark::State& st) {
  Fixture f(400, static_cast<int>(st.range(0)), static_cast<int>(st.range(0)));
  Stepper stepper(f.grid);
  const double dt = stable_dt(f.state, f.gas, f.grid, 0.4);
  for (auto _ : st) {
    State s = f.state;
    stepper.step(s, dt, f.bc, f.gas);
    benchmark::DoNotOptimize(s.rho.data());
  }
}
BENCHMARK(BM_Step)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EnergyRecord(benchmark::State& st) {
  Fixture f(400, 16, 16);
  for (auto _ : st) {
    EnergyRecord r = energy_record(f.state, f.table, -1.43, f.bc, f.grid);
    benchmark::DoNotOptimize(r.E);
  }
}
BENCHMARK(BM_EnergyRecord)->Unit(benchmark::kMillisecond);

void BM_BuildProfile(benchmark::State& st) {
  const GasParams gas;
  const ShockConnection conn = solve_hugoniot(gas, 1.0, 0.1);
  for (auto _ : st) {
    ProfileTable t = build_profile(gas, conn);
    benchmark::DoNotOptimize(t.xi.data());
  }
}
BENCHMARK(BM_BuildProfile)->Unit(benchmark::kMillisecond);

void BM_ProfileEval(benchmark::State& st) {
  const GasParams gas;
  const ProfileTable t = build_profile(gas, solve_hugoniot(gas, 1.0, 0.1));
  double xi = -10.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(profile_eval(t, xi));
    xi = xi > 10.0 ? -10.0 : xi + 0.013;
  }
}
BENCHMARK(BM_ProfileEval);

}  // namespace

BENCHMARK_MAIN();

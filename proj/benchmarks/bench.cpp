#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "tpjc/blocks.hpp"
#include "tpjc/evolve.hpp"
#include "tpjc/operators.hpp"
#include "tpjc/params.hpp"
#include "tpjc/pg_series.hpp"
#include "tpjc/specfun.hpp"
#include "tpjc/state.hpp"

namespace {

using namespace tpjc;

SystemParams bench_params(double eta) {
    return SystemParams{.nu = 1.0,
                        .omega_c = 1.0,
                        .delta = 20.0,
                        .g1 = 1.0,
                        .g2 = 1.0,
                        .eta = eta};
}

std::vector<double> tau_grid(double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = hi * static_cast<double>(i) / (count - 1);
    }
    return grid;
}

void bm_coupling_profile(benchmark::State& state) {
    const int m_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CouplingProfile profile(0.2, m_max);
        benchmark::DoNotOptimize(profile.values().data());
    }
}
BENCHMARK(bm_coupling_profile)->Arg(64)->Arg(256)->Arg(1024);

void bm_cos_position(benchmark::State& state) {
    const int m_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const Operator cosm = build_cos_position(0.2, m_max);
        benchmark::DoNotOptimize(cosm.data());
    }
}
BENCHMARK(bm_cos_position)->Arg(40)->Arg(128);

void bm_full_hamiltonian(benchmark::State& state) {
    const SystemParams p = bench_params(0.2);
    const int side = static_cast<int>(state.range(0));
    const FockCutoffs cutoffs{side, side, 20};
    for (auto _ : state) {
        const Operator h = build_full_hamiltonian(p, cutoffs);
        benchmark::DoNotOptimize(h.data());
    }
}
BENCHMARK(bm_full_hamiltonian)->Arg(10)->Arg(20)->Arg(30);

void bm_effective_hamiltonian(benchmark::State& state) {
    const SystemParams p = bench_params(0.2);
    const int side = static_cast<int>(state.range(0));
    const FockCutoffs cutoffs{side, side, 20};
    for (auto _ : state) {
        const Operator h = build_effective_hamiltonian(p, cutoffs);
        benchmark::DoNotOptimize(h.data());
    }
}
BENCHMARK(bm_effective_hamiltonian)->Arg(10)->Arg(20)->Arg(30);

void bm_block_closed_form(benchmark::State& state) {
    const BlockCoefficients block = BlockCoefficients::make(3, 4, 0.2, 1.0);
    double tau = 0.0;
    for (auto _ : state) {
        tau += 0.01;
        const BlockAmplitudes amp = evolve_block_closed_form(block, tau);
        benchmark::DoNotOptimize(amp.b);
    }
}
BENCHMARK(bm_block_closed_form);

void bm_pg_series(benchmark::State& state) {
    const SystemParams p = bench_params(0.2);
    Preparation prep;
    prep.motion = ModePrep::coherent_state(2.0);
    prep.field = ModePrep::coherent_state(2.0);
    const std::vector<double> tau = tau_grid(25.0, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const PgSeries series = pg_series(p, prep, tau, 1e-10);
        benchmark::DoNotOptimize(series.values.data());
    }
}
BENCHMARK(bm_pg_series)->Arg(500)->Arg(2000);

void bm_eigen_propagation(benchmark::State& state) {
    const SystemParams p = bench_params(0.2);
    const int side = static_cast<int>(state.range(0));
    const FockCutoffs cutoffs{side, side, 20};
    Preparation prep;
    prep.motion = ModePrep::coherent_state(1.0);
    prep.field = ModePrep::coherent_state(1.0);
    const CompositeState psi0 = prepare_initial_state(prep, cutoffs, 1e-2);
    const Operator h = build_effective_hamiltonian(p, cutoffs);
    const std::vector<double> t = tau_grid(100.0, 50);
    IntegrationConfig cfg;
    cfg.propagator = PropagatorKind::eigendecomposition;
    for (auto _ : state) {
        const Trajectory traj = integrate_schrodinger(h, psi0, t, cfg, p.nu);
        benchmark::DoNotOptimize(traj.states.back().data());
    }
}
BENCHMARK(bm_eigen_propagation)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void bm_adaptive_propagation(benchmark::State& state) {
    const SystemParams p = bench_params(0.2);
    const FockCutoffs cutoffs{8, 8, 20};
    Preparation prep;
    prep.motion = ModePrep::coherent_state(1.0);
    prep.field = ModePrep::coherent_state(1.0);
    const CompositeState psi0 = prepare_initial_state(prep, cutoffs, 1e-2);
    const Operator h = build_full_hamiltonian(p, cutoffs);
    const std::vector<double> t = tau_grid(2.0, 20);
    IntegrationConfig cfg;
    cfg.propagator = PropagatorKind::adaptive_step;
    for (auto _ : state) {
        const Trajectory traj = integrate_schrodinger(h, psi0, t, cfg, p.nu);
        benchmark::DoNotOptimize(traj.states.back().data());
    }
}
BENCHMARK(bm_adaptive_propagation)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

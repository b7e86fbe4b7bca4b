#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "gnwave/conversions.hpp"
#include "gnwave/dispersive_rhs.hpp"
#include "gnwave/elliptic.hpp"
#include "gnwave/nswe_rhs.hpp"
#include "gnwave/scenarios.hpp"
#include "gnwave/stepper.hpp"

using namespace gnwave;

namespace {

// a propagating wave over the full domain: every cell wet, nothing masked
struct Setup {
    Scenario sc;
    explicit Setup(int n) : sc(solitary_scenario(0.2, n)) {}
};

void bm_nswe_rhs(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nswe_rhs(s.sc.initial, s.sc.bathy, s.sc.bc, s.sc.phys));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_cell_to_node(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cell_to_node(s.sc.initial.h, s.sc.bc, Parity::even));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_node_to_cell(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    const std::vector<double> nodal = cell_to_node(s.sc.initial.h, s.sc.bc, Parity::even);
    for (auto _ : state) {
        benchmark::DoNotOptimize(node_to_cell(nodal, s.sc.bc, Parity::even));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_elliptic_assemble(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    const std::vector<double> hn = cell_to_node(s.sc.initial.h, s.sc.bc, Parity::even);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            assemble_elliptic(hn, s.sc.bathy, s.sc.phys.alpha, s.sc.bc, s.sc.phys.eps_dry));
    }
}

void bm_elliptic_solve(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    const std::vector<double> hn = cell_to_node(s.sc.initial.h, s.sc.bc, Parity::even);
    const EllipticFactorization fact =
        assemble_elliptic(hn, s.sc.bathy, s.sc.phys.alpha, s.sc.bc, s.sc.phys.eps_dry);
    std::vector<double> rhs(hn.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = hn[i] * std::sin(0.37 * i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fact.solve(rhs));
    }
}

void bm_dispersive_rhs(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    const int n = s.sc.grid.n_cells;
    std::vector<double> zeta(n);
    for (int j = 0; j < n; ++j)
        zeta[j] = s.sc.initial.h[j] + s.sc.bathy.cell[j] - s.sc.bathy.h0;
    const std::vector<double> zn = cell_to_node(zeta, s.sc.bc, Parity::even);
    const std::vector<double> qn = cell_to_node(s.sc.initial.q, s.sc.bc, Parity::odd);
    const DispersiveRhs rhs(zn, s.sc.bathy, s.sc.phys, s.sc.bc,
                            std::vector<char>(n + 1, 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rhs(qn));
    }
}

void bm_strang_step(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    const double dt = s.sc.control.fixed_dt;
    for (auto _ : state) {
        benchmark::DoNotOptimize(strang_step(s.sc.initial, dt, s.sc.bathy, s.sc.bc,
                                             s.sc.phys, s.sc.control.breaking));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(bm_nswe_rhs)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_cell_to_node)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_node_to_cell)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_elliptic_assemble)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_elliptic_solve)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_dispersive_rhs)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_strang_step)->Arg(256)->Arg(1024)->Arg(4096);

} // namespace

BENCHMARK_MAIN();

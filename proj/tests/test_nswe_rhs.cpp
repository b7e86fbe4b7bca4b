#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/grid.hpp"
#include "gnwave/nswe_rhs.hpp"
#include "gnwave/rk4.hpp"
#include "gnwave/scenarios.hpp"
#include "gnwave/stepper.hpp"
#include "support/ritter.hpp"

using namespace gnwave;

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

TEST_CASE("lake at rest over a submerged bump is an exact fixed point") {
    const Grid grid(0.0, 10.0, 50);
    const BcPair bc{Bc::wall, Bc::wall};
    std::vector<double> b(grid.n_nodes());
    for (int i = 0; i < grid.n_nodes(); ++i) {
        const double x = grid.node(i);
        b[i] = 0.4 * std::exp(-(x - 5.0) * (x - 5.0));
    }
    const Bathymetry bathy = make_bathymetry(grid, 1.0, b, bc);
    const CellState rest = lake_at_rest(bathy);

    // balanced to rounding: the surface reassembly h + b - h0 is not
    // associative-exact, so "zero" means far below any physical scale
    const CellState rhs = nswe_rhs(rest, bathy, bc, Physics{});
    CHECK(max_abs(rhs.h) < 1e-13);
    CHECK(max_abs(rhs.q) < 1e-13);
}

TEST_CASE("lake at rest with an emerged beach is an exact fixed point") {
    const Grid grid(0.0, 20.0, 100);
    const BcPair bc{Bc::wall, Bc::wall};
    const Bathymetry bathy =
        make_bathymetry(grid, 0.5, beach_profile(grid, 0.1, 8.0, Shoreward::right), bc);
    Physics phys;
    CellState rest = lake_at_rest(bathy); // dry beyond x = 13
    clamp_dry(rest, phys.eps_dry);

    const CellState rhs = nswe_rhs(rest, bathy, bc, phys);
    CHECK(max_abs(rhs.h) < 1e-13);
    CHECK(max_abs(rhs.q) < 1e-13);
}

TEST_CASE("a clamped film on an emerged slope stays inert beside moving water") {
    // Waterline robustness: cells clamped to the dry floor must see exactly
    // zero flux even though their wet neighbours are active.
    const Grid grid(-5.0, 20.0, 100);
    const BcPair bc{Bc::wall, Bc::open};
    const Bathymetry bathy =
        make_bathymetry(grid, 0.3, beach_profile(grid, 1.0 / 19.85, 0.0, Shoreward::left), bc);
    Physics phys;
    CellState s = lake_at_rest(bathy);
    clamp_dry(s, phys.eps_dry);
    // a hump of moving water well away from the shoreline
    for (int j = 0; j < grid.n_cells; ++j) {
        const double x = grid.center(j);
        if (s.h[j] > 0.1) {
            s.h[j] += 0.05 * std::exp(-(x - 10.0) * (x - 10.0));
            s.q[j] = -0.1 * (s.h[j] - 0.2);
        }
    }

    const CellState rhs = nswe_rhs(s, bathy, bc, phys);
    for (int j = 0; j < grid.n_cells; ++j) {
        if (s.h[j] <= phys.eps_dry) {
            CHECK(rhs.h[j] == 0.0);
            CHECK(rhs.q[j] == 0.0);
        }
    }
    CHECK(max_abs(rhs.q) > 0.0); // the wet region is genuinely active
}

TEST_CASE("periodic fluxes telescope") {
    const Grid grid(0.0, 30.0, 60);
    const BcPair bc{Bc::periodic, Bc::periodic};
    const Bathymetry bathy = make_bathymetry(grid, 0.5, flat_bottom(grid), bc);
    CellState s;
    s.h.resize(grid.n_cells);
    s.q.resize(grid.n_cells);
    for (int j = 0; j < grid.n_cells; ++j) {
        const double x = grid.center(j);
        s.h[j] = 0.5 + 0.1 * std::sin(2.0 * std::numbers::pi * x / 30.0);
        s.q[j] = 0.05 * std::cos(2.0 * std::numbers::pi * x / 30.0);
    }
    const CellState rhs = nswe_rhs(s, bathy, bc, Physics{});
    double sh = 0.0, sq = 0.0;
    for (int j = 0; j < grid.n_cells; ++j) {
        sh += rhs.h[j];
        sq += rhs.q[j];
    }
    CHECK(std::abs(sh) < 1e-13);
    CHECK(std::abs(sq) < 1e-13); // flat bottom: no source either
}

TEST_CASE("dry-bed dam break tracks the self-similar solution") {
    const int n = 800;
    const Grid grid(-10.0, 20.0, n);
    const BcPair bc{Bc::open, Bc::open};
    const Bathymetry bathy = make_bathymetry(grid, 1.0, flat_bottom(grid), bc);
    Physics phys;

    CellState s;
    s.h.resize(n);
    s.q.assign(n, 0.0);
    for (int j = 0; j < n; ++j) s.h[j] = grid.center(j) < 0.0 ? 1.0 : 0.0;
    clamp_dry(s, phys.eps_dry);

    const double t_end = 1.2;
    const double dt = 0.4 * grid.dx / std::sqrt(phys.g * 1.0);
    const auto rhs = [&](const CellState& y) { return nswe_rhs(y, bathy, bc, phys); };
    double t = 0.0;
    while (t < t_end - 1e-12) {
        const double step = std::min(dt, t_end - t);
        s = rk4_step(s, step, rhs);
        clamp_dry(s, phys.eps_dry);
        t += step;
    }

    // L1 error against the exact rarefaction, away from the two kinks.
    double l1 = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto ex = testsupport::ritter(grid.center(j), t_end, 1.0, phys.g);
        l1 += std::abs(s.h[j] - ex.h) * grid.dx;
    }
    CHECK(l1 < 0.02); // total water volume is 10; ~0.2% L1
    // front position: exact 2 c0 t = 7.52; the scheme's front must be close
    int front = 0;
    for (int j = 0; j < n; ++j)
        if (s.h[j] > 1e-4) front = j;
    CHECK(grid.center(front) > 6.8);
    CHECK(grid.center(front) < 8.0);
}

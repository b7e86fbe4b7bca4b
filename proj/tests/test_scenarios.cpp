#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gnwave/dispersion.hpp"
#include "gnwave/scenarios.hpp"

using namespace gnwave;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("the traveling wave satisfies its own algebra") {
    SolitaryWaveParams p;
    p.h0 = 0.5;
    p.a = 0.1;
    p.x_center = 3.0;

    std::vector<double> x(101);
    for (int i = 0; i <= 100; ++i) x[i] = -5.0 + 0.16 * i;

    std::vector<double> h, u;
    solitary_wave(p, x, 0.0, h, u);

    const double c = p.celerity();
    CHECK(c == doctest::Approx(std::sqrt(9.81 * 0.6)).epsilon(1e-15));
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(h[i] >= p.h0);
        CHECK(h[i] <= p.h0 + p.a);
        // h u = c (h - h0) is an identity of the profile
        CHECK(h[i] * u[i] == doctest::Approx(c * (h[i] - p.h0)).epsilon(1e-13));
    }

    // crest sits at x_center at t = 0 and travels at c
    std::vector<double> crest_x = {p.x_center}, hc, uc;
    solitary_wave(p, crest_x, 0.0, hc, uc);
    CHECK(hc[0] == doctest::Approx(p.h0 + p.a).epsilon(1e-15));

    crest_x[0] = p.x_center + c * 1.7;
    solitary_wave(p, crest_x, 1.7, hc, uc);
    CHECK(hc[0] == doctest::Approx(p.h0 + p.a).epsilon(1e-12));
}

TEST_CASE("cell averages match independent quadrature") {
    SolitaryWaveParams p;
    p.h0 = 0.5;
    p.a = 0.15;
    p.x_center = 14.0;
    const Grid grid(0.0, 30.0, 75); // dx = 0.4, coarse enough that averaging matters

    const CellState s = solitary_cell_averages(p, grid, 0.0, false);
    const double c = p.celerity();
    const double k = p.kappa();

    for (int j = 0; j < grid.n_cells; ++j) {
        // composite Simpson with 40 panels per cell
        const int m = 40;
        const double w = grid.dx / m;
        double acc = 0.0;
        for (int i = 0; i <= m; ++i) {
            const double xx = grid.node(j) + i * w;
            const double sech = 1.0 / std::cosh(k * (xx - p.x_center));
            const double f = p.a * sech * sech;
            acc += f * ((i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0));
        }
        const double avg = p.h0 + acc * w / 3.0 / grid.dx;
        CHECK(s.h[j] == doctest::Approx(avg).epsilon(1e-10));
        CHECK(s.q[j] == doctest::Approx(c * (s.h[j] - p.h0)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("periodic averages wrap the crest and keep the excess mass") {
    SolitaryWaveParams p;
    p.h0 = 0.5;
    p.a = 0.1;
    const Grid grid(0.0, 30.0, 240);

    p.x_center = 45.0; // one period to the right of 15
    const CellState wrapped = solitary_cell_averages(p, grid, 0.0, true);
    p.x_center = -15.0; // one period to the left
    const CellState wrapped2 = solitary_cell_averages(p, grid, 0.0, true);
    p.x_center = 15.0;
    const CellState direct = solitary_cell_averages(p, grid, 0.0, true);

    for (int j = 0; j < grid.n_cells; ++j) {
        CHECK(wrapped.h[j] == direct.h[j]);
        CHECK(wrapped2.h[j] == direct.h[j]);
    }

    // the full-line excess integral is 2a/kappa; the images fold the tails in
    double mass = 0.0;
    for (int j = 0; j < grid.n_cells; ++j) mass += (direct.h[j] - p.h0) * grid.dx;
    CHECK(mass == doctest::Approx(2.0 * p.a / p.kappa()).epsilon(1e-7));
}

TEST_CASE("a lake at rest is flat where wet and empty where the bottom pierces") {
    const Grid grid(0.0, 20.0, 100);
    const BcPair bc{Bc::wall, Bc::wall};
    const double h0 = 0.4;
    const Bathymetry bathy =
        make_bathymetry(grid, h0, beach_profile(grid, 0.05, 5.0, Shoreward::right), bc);

    const CellState s = lake_at_rest(bathy);
    for (int j = 0; j < grid.n_cells; ++j) {
        CHECK(s.q[j] == 0.0);
        if (bathy.cell[j] < h0)
            CHECK(s.h[j] + bathy.cell[j] == doctest::Approx(h0).epsilon(1e-15));
        else
            CHECK(s.h[j] == 0.0);
    }

    const CellState raised = lake_at_rest(bathy, 0.1);
    for (int j = 0; j < grid.n_cells; ++j) CHECK(raised.h[j] >= s.h[j]);
}

TEST_CASE("beach profiles rise shoreward at the stated ratio") {
    const Grid grid(0.0, 10.0, 50);
    const auto left = beach_profile(grid, 0.02, 4.0, Shoreward::left);
    const auto right = beach_profile(grid, 0.02, 6.0, Shoreward::right);

    for (int i = 0; i < grid.n_nodes(); ++i) {
        const double x = grid.node(i);
        CHECK(left[i] == doctest::Approx(0.02 * std::max(0.0, 4.0 - x)).epsilon(1e-14));
        // mirror image about the domain midpoint
        CHECK(left[i] == doctest::Approx(right[grid.n_nodes() - 1 - i]).epsilon(1e-13));
        if (x >= 4.0) CHECK(left[i] == 0.0);
    }
    CHECK_THROWS_AS(beach_profile(grid, -0.1, 4.0, Shoreward::left), error);
}

TEST_CASE("every catalogued scenario constructs consistently") {
    for (const std::string& name : scenario_names()) {
        CAPTURE(name);
        const Scenario sc = make_scenario(name);
        CHECK(sc.name != "");
        CHECK(sc.grid.n_cells >= 7);
        CHECK(sc.initial.h.size() == static_cast<std::size_t>(sc.grid.n_cells));
        CHECK(sc.initial.q.size() == sc.initial.h.size());
        CHECK(sc.bathy.cell.size() == sc.initial.h.size());
        CHECK(sc.control.t_end > 0.0);
        CHECK(sc.control.fixed_dt > 0.0);
        for (double h : sc.initial.h) {
            CHECK(std::isfinite(h));
            CHECK(h >= 0.0);
        }
        sc.phys.validate();
    }
    CHECK_THROWS_AS(make_scenario("no-such-setup"), error);
    CHECK(scenario_names().size() == 10);
}

TEST_CASE("the flat-bottom propagation preset") {
    const Scenario sc = solitary_scenario(0.2);
    CHECK(sc.grid.length() == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(sc.phys.alpha == 1.0);
    CHECK(is_periodic(sc.bc));
    CHECK(sc.control.fixed_dt ==
          doctest::Approx(sc.grid.dx / std::sqrt(9.81 * 0.5)).epsilon(1e-15));
    for (double b : sc.bathy.cell) CHECK(b == 0.0);

    // crest of 0.2 * 0.5 on top of 0.5 m of water, centered mid-domain
    const auto it = std::max_element(sc.initial.h.begin(), sc.initial.h.end());
    CHECK(*it == doctest::Approx(0.6).epsilon(1e-3));
    const int jmax = static_cast<int>(it - sc.initial.h.begin());
    CHECK(std::abs(sc.grid.center(jmax) - 15.0) <= sc.grid.dx);
}

TEST_CASE("the runup preset starts the trough at five percent of the crest") {
    const Scenario sc = synolakis_scenario();
    CHECK(sc.grid.dx == doctest::Approx(0.08).epsilon(1e-12));
    CHECK(sc.grid.x0 == -13.0);
    CHECK(sc.phys.f == doctest::Approx(0.002).epsilon(1e-15));
    CHECK(sc.control.t_end == doctest::Approx(70.0 * std::sqrt(0.3 / 9.81)).epsilon(1e-14));

    SolitaryWaveParams p;
    p.h0 = 0.3;
    p.a = 0.28 * 0.3;
    p.direction = -1;
    p.x_center = std::acosh(std::sqrt(20.0)) / p.kappa();
    std::vector<double> toe = {0.0}, h, u;
    solitary_wave(p, toe, 0.0, h, u);
    CHECK((h[0] - p.h0) / p.a == doctest::Approx(0.05).epsilon(1e-12));

    // the wave moves toward the beach: shoreward momentum everywhere
    for (double q : sc.initial.q) CHECK(q <= 0.0);
}

TEST_CASE("the oscillatory preset discretizes one cosine period") {
    const Scenario sc = periodic_wave_scenario(0.01, 1.159);
    CHECK(sc.grid.length() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sc.grid.n_cells == 50);
    CHECK(sc.phys.alpha == doctest::Approx(1.159).epsilon(1e-15));

    double mean = 0.0, amp = 0.0;
    for (double h : sc.initial.h) {
        mean += h;
        amp = std::max(amp, std::abs(h - 1.0));
    }
    mean /= sc.grid.n_cells;
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-14)); // the cosine integrates away
    CHECK(amp == doctest::Approx(0.01).epsilon(2e-3));  // cell averaging shaves a little

    // rightward-propagating linear wave: q locked to the surface by c_p
    const DispersionQuery q{pi, 1.0, sc.phys.g, 1.159, 0.0};
    const double cp = phase_velocity_gn(q);
    for (int j = 0; j < sc.grid.n_cells; ++j)
        CHECK(sc.initial.q[j] ==
              doctest::Approx(cp * (sc.initial.h[j] - 1.0)).epsilon(1e-12).scale(0.01));

    // long enough for the acceptance-style propagation distance
    CHECK(sc.control.t_end == doctest::Approx(25.0 * 2.0 * pi / omega_gn(q)).epsilon(1e-13));
}

TEST_CASE("gauges follow the catalogue") {
    const Scenario sc = make_scenario("shoaling-0.456");
    REQUIRE(sc.gauges.size() == 5);
    CHECK(sc.gauges.front() == doctest::Approx(27.5 - 4.910).epsilon(1e-12));
    CHECK(sc.gauges.back() == doctest::Approx(27.5 - 3.982).epsilon(1e-12));

    const Scenario wall = make_scenario("wall-low");
    REQUIRE(wall.gauges.size() == 1);
    CHECK(wall.gauges[0] == doctest::Approx(17.75).epsilon(1e-12));
}

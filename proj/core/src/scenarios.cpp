#include "gnwave/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gnwave/dispersion.hpp"

namespace gnwave {

void solitary_wave(const SolitaryWaveParams& p, const std::vector<double>& x, double t,
                   std::vector<double>& h, std::vector<double>& u) {
    p.validate();
    const double c = p.celerity();
    const double k = p.kappa();
    const double crest = p.x_center + p.direction * c * t;
    h.resize(x.size());
    u.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = 1.0 / std::cosh(k * (x[i] - crest));
        h[i] = p.h0 + p.a * s * s;
        u[i] = p.direction * c * (1.0 - p.h0 / h[i]);
    }
}

namespace {

// Cell averages of the excess column a sech^2(kappa (x - crest)), exactly.
std::vector<double> excess_averages(const SolitaryWaveParams& p, const Grid& grid, double t,
                                    bool periodic) {
    const double c = p.celerity();
    const double k = p.kappa();
    double crest = p.x_center + p.direction * c * t;
    int n_images = 1;
    if (periodic) {
        const double L = grid.length();
        crest = grid.x0 + std::fmod(crest - grid.x0, L);
        if (crest < grid.x0) crest += L;
        n_images = 3;
    }
    std::vector<double> dh(grid.n_cells, 0.0);
    for (int m = 0; m < n_images; ++m) {
        const double xc = crest + (m - n_images / 2) * grid.length();
        for (int j = 0; j < grid.n_cells; ++j) {
            const double tl = std::tanh(k * (grid.node(j) - xc));
            const double tr = std::tanh(k * (grid.node(j + 1) - xc));
            dh[j] += p.a * (tr - tl) / (k * grid.dx);
        }
    }
    return dh;
}

} // namespace

CellState solitary_cell_averages(const SolitaryWaveParams& p, const Grid& grid, double t,
                                 bool periodic) {
    p.validate();
    const std::vector<double> dh = excess_averages(p, grid, t, periodic);
    const double c = p.celerity();
    CellState s;
    s.h.resize(grid.n_cells);
    s.q.resize(grid.n_cells);
    for (int j = 0; j < grid.n_cells; ++j) {
        s.h[j] = p.h0 + dh[j];
        s.q[j] = p.direction * c * dh[j];
    }
    return s;
}

CellState solitary_over_bathymetry(const SolitaryWaveParams& p, const Grid& grid,
                                   const Bathymetry& bathy) {
    p.validate();
    detail::require(static_cast<int>(bathy.cell.size()) == grid.n_cells,
                    "solitary wave: bathymetry does not match the grid");
    const std::vector<double> dh = excess_averages(p, grid, 0.0, false);
    const double c = p.celerity();
    CellState s;
    s.h.resize(grid.n_cells);
    s.q.resize(grid.n_cells);
    for (int j = 0; j < grid.n_cells; ++j) {
        s.h[j] = std::max(0.0, p.h0 - bathy.cell[j] + dh[j]);
        s.q[j] = p.direction * c * dh[j];
    }
    return s;
}

CellState lake_at_rest(const Bathymetry& bathy, double zeta0) {
    CellState s;
    s.h.resize(bathy.cell.size());
    s.q.assign(bathy.cell.size(), 0.0);
    for (std::size_t j = 0; j < bathy.cell.size(); ++j)
        s.h[j] = std::max(0.0, bathy.h0 + zeta0 - bathy.cell[j]);
    return s;
}

std::vector<double> flat_bottom(const Grid& grid) {
    return std::vector<double>(grid.n_nodes(), 0.0);
}

std::vector<double> beach_profile(const Grid& grid, double ratio, double toe, Shoreward side) {
    detail::require(ratio > 0.0, "beach profile: ratio must be positive");
    std::vector<double> b(grid.n_nodes());
    for (int i = 0; i < grid.n_nodes(); ++i) {
        const double x = grid.node(i);
        b[i] = ratio * std::max(0.0, side == Shoreward::left ? toe - x : x - toe);
    }
    return b;
}

Scenario solitary_scenario(double a_over_h0, int n_cells) {
    detail::require(a_over_h0 > 0.0, "solitary scenario: amplitude must be positive");
    Scenario sc;
    sc.name = "solitary";
    sc.grid = Grid(0.0, 30.0, n_cells);
    sc.bc = {Bc::periodic, Bc::periodic};
    sc.phys.alpha = 1.0;
    sc.bathy = make_bathymetry(sc.grid, 0.5, flat_bottom(sc.grid), sc.bc);

    SolitaryWaveParams p;
    p.h0 = 0.5;
    p.a = a_over_h0 * p.h0;
    p.x_center = 15.0;
    p.g = sc.phys.g;
    sc.initial = solitary_cell_averages(p, sc.grid, 0.0, true);

    sc.control.fixed_dt = sc.grid.dx / std::sqrt(sc.phys.g * p.h0);
    sc.control.t_end = 3.0;
    return sc;
}

Scenario wall_reflection_scenario(double a_over_h0) {
    Scenario sc;
    sc.name = "wall-reflection";
    sc.grid = Grid(0.0, 60.0, 500);
    sc.bc = {Bc::wall, Bc::open};
    sc.bathy = make_bathymetry(sc.grid, 0.7, beach_profile(sc.grid, 1.0 / 50.0, 20.0,
                                                           Shoreward::left),
                               sc.bc);

    SolitaryWaveParams p;
    p.h0 = 0.7;
    p.a = a_over_h0 * p.h0;
    p.x_center = 50.0;
    p.direction = -1;
    p.g = sc.phys.g;
    sc.initial = solitary_over_bathymetry(p, sc.grid, sc.bathy);

    sc.control.fixed_dt = 0.05;
    sc.control.t_end = 30.0;
    sc.gauges = {17.75};
    return sc;
}

Scenario shoaling_scenario(double a_over_h0) {
    Scenario sc;
    sc.name = "shoaling";
    sc.grid = Grid(0.0, 36.0, 1440); // dx = 0.025 m
    sc.bc = {Bc::open, Bc::wall};
    sc.bathy = make_bathymetry(sc.grid, 0.25, beach_profile(sc.grid, 1.0 / 30.0, 20.0,
                                                            Shoreward::right),
                               sc.bc);

    SolitaryWaveParams p;
    p.h0 = 0.25;
    p.a = a_over_h0 * p.h0;
    p.x_center = 10.0;
    p.g = sc.phys.g;
    sc.initial = solitary_over_bathymetry(p, sc.grid, sc.bathy);

    sc.control.fixed_dt = 0.016;
    sc.control.t_end = 15.0;

    // Gauge offsets seaward of the rest shoreline (x = 27.5 m), catalogued per
    // amplitude.
    struct GaugeSet {
        double a_over_h0;
        double offsets[5];
    };
    static constexpr GaugeSet sets[] = {
        {0.096, {2.430, 2.215, 1.960, 1.740, 1.502}},
        {0.298, {3.980, 3.765, 3.510, 3.290, 3.052}},
        {0.456, {4.910, 4.695, 4.440, 4.220, 3.982}},
        {0.534, {5.180, 4.965, 4.710, 4.490, 4.252}},
    };
    const double shoreline = 20.0 + 0.25 * 30.0;
    for (const GaugeSet& gs : sets)
        if (std::abs(gs.a_over_h0 - a_over_h0) < 1e-9)
            for (double off : gs.offsets) sc.gauges.push_back(shoreline - off);
    return sc;
}

Scenario synolakis_scenario(double a_over_h0, double friction) {
    Scenario sc;
    sc.name = "synolakis";
    sc.grid = Grid(-13.0, 43.2, 540); // dx = 0.08 m
    sc.bc = {Bc::wall, Bc::open};
    sc.phys.f = friction;
    const double h0 = 0.3;
    sc.bathy = make_bathymetry(sc.grid, h0, beach_profile(sc.grid, 1.0 / 19.85, 0.0,
                                                          Shoreward::left),
                               sc.bc);

    SolitaryWaveParams p;
    p.h0 = h0;
    p.a = a_over_h0 * h0;
    p.direction = -1;
    p.g = sc.phys.g;
    // Crest placed so the surface displacement at the toe is 5% of the crest.
    p.x_center = std::acosh(std::sqrt(20.0)) / p.kappa();
    sc.initial = solitary_over_bathymetry(p, sc.grid, sc.bathy);

    sc.control.fixed_dt = 0.02;
    sc.control.t_end = 70.0 * std::sqrt(h0 / sc.phys.g);
    return sc;
}

Scenario periodic_wave_scenario(double amplitude, double alpha) {
    detail::require(amplitude > 0.0, "periodic wave: amplitude must be positive");
    Scenario sc;
    sc.name = "periodic-wave";
    sc.grid = Grid(0.0, 2.0, 50);
    sc.bc = {Bc::periodic, Bc::periodic};
    sc.phys.alpha = alpha;
    const double h0 = 1.0;
    sc.bathy = make_bathymetry(sc.grid, h0, flat_bottom(sc.grid), sc.bc);

    const double k = 2.0 * std::numbers::pi / sc.grid.length(); // kh0 = pi
    const DispersionQuery q{k * h0, h0, sc.phys.g, alpha, 0.0};
    const double cp = phase_velocity_gn(q);
    sc.initial.h.resize(sc.grid.n_cells);
    sc.initial.q.resize(sc.grid.n_cells);
    for (int j = 0; j < sc.grid.n_cells; ++j) {
        const double zbar = amplitude *
                            (std::sin(k * sc.grid.node(j + 1)) - std::sin(k * sc.grid.node(j))) /
                            (k * sc.grid.dx);
        sc.initial.h[j] = h0 + zbar;
        sc.initial.q[j] = cp * zbar;
    }

    sc.control.fixed_dt = 0.03;
    sc.control.t_end = 25.0 * 2.0 * std::numbers::pi / omega_gn(q);
    return sc;
}

Scenario make_scenario(const std::string& name) {
    if (name == "solitary-small") return solitary_scenario(0.05);
    if (name == "solitary-large") return solitary_scenario(0.2);
    if (name == "wall-low") return wall_reflection_scenario(0.1);
    if (name == "wall-high") return wall_reflection_scenario(0.174);
    if (name == "shoaling-0.096") return shoaling_scenario(0.096);
    if (name == "shoaling-0.298") return shoaling_scenario(0.298);
    if (name == "shoaling-0.456") return shoaling_scenario(0.456);
    if (name == "shoaling-0.534") return shoaling_scenario(0.534);
    if (name == "synolakis") return synolakis_scenario();
    if (name == "periodic-wave") return periodic_wave_scenario();
    throw error("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() {
    return {"solitary-small", "solitary-large",  "wall-low",       "wall-high",
            "shoaling-0.096", "shoaling-0.298",  "shoaling-0.456", "shoaling-0.534",
            "synolakis",      "periodic-wave"};
}

} // namespace gnwave

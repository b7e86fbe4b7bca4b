#include "gnwave/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gnwave/conversions.hpp"
#include "gnwave/dispersive_rhs.hpp"
#include "gnwave/nswe_rhs.hpp"
#include "gnwave/rk4.hpp"

namespace gnwave {

void clamp_dry(CellState& s, double eps_dry) {
    const int n = static_cast<int>(s.h.size());
    for (int j = 0; j < n; ++j) {
        if (s.h[j] <= eps_dry) {
            s.h[j] = eps_dry;
            s.q[j] = 0.0;
        }
    }
}

double cfl_dt(const CellState& s, double dx, const Physics& phys, double cfl) {
    detail::require(cfl > 0.0, "cfl_dt: cfl must be positive");
    double speed = 0.0;
    const int n = static_cast<int>(s.h.size());
    for (int j = 0; j < n; ++j) {
        if (s.h[j] <= phys.eps_dry) continue;
        const double u = s.q[j] / s.h[j];
        speed = std::max(speed, std::abs(u) + std::sqrt(phys.g * s.h[j]));
    }
    detail::require(speed > 0.0, "cfl_dt: no wet cells to size the step from");
    return cfl * dx / speed;
}

namespace {

// Dry cells carry the clamped film's surface (eps + b - h0), a staircase that
// would smear into the wet region through the global conversion. Replace it
// by the nearest wet cell's surface so a flat lake converts to a flat lake.
void fill_surface_over_dry(std::vector<double>& zbar, const std::vector<double>& h,
                           double eps_dry) {
    const int n = static_cast<int>(zbar.size());
    std::vector<int> dist(n);
    std::vector<double> fill(n);
    const int far = n + 1;

    int d = far;
    double v = 0.0;
    for (int j = 0; j < n; ++j) { // nearest wet on the left
        if (h[j] > eps_dry) {
            d = 0;
            v = zbar[j];
        } else if (d < far) {
            ++d;
        }
        dist[j] = d;
        fill[j] = v;
    }
    d = far;
    for (int j = n - 1; j >= 0; --j) { // right side only wins when strictly closer
        if (h[j] > eps_dry) {
            d = 0;
            v = zbar[j];
        } else if (d < far) {
            ++d;
        }
        if (d < dist[j]) {
            dist[j] = d;
            fill[j] = v;
        }
    }
    for (int j = 0; j < n; ++j)
        if (h[j] <= eps_dry && dist[j] < far) zbar[j] = fill[j];
}

// Nodes whose conversion stencils reach a dry cell see a discharge and a
// filled surface that disagree, so their ratio is not a usable velocity.
// Retire them from the dispersive operator; the waterline is advanced by
// the hyperbolic part alone and picks the correction back up once the
// stencils clear the dry region.
std::vector<char> waterline_halo(const std::vector<double>& h, BcPair bc, double eps_dry) {
    const int n = static_cast<int>(h.size());
    std::vector<char> halo(n + 1, 0);
    const bool periodic = is_periodic(bc);
    for (int j = 0; j < n; ++j) {
        if (h[j] > eps_dry) continue;
        for (int i = j - 2; i <= j + 3; ++i) {
            if (periodic)
                halo[((i % n) + n) % n] = 1;
            else
                halo[std::clamp(i, 0, n)] = 1;
        }
    }
    if (periodic && (halo[0] || halo[n])) halo[0] = halo[n] = 1;
    return halo;
}

CellState dispersive_substep(CellState mid, double dt, const std::vector<char>& node_mask,
                             const Bathymetry& bathy, BcPair bc, const Physics& phys) {
    const int n = static_cast<int>(mid.h.size());
    std::vector<double> zbar(n);
    for (int j = 0; j < n; ++j) zbar[j] = mid.h[j] + bathy.cell[j] - bathy.h0;
    fill_surface_over_dry(zbar, mid.h, phys.eps_dry);

    const DispersiveRhs rhs(cell_to_node(zbar, bc, Parity::even), bathy, phys, bc, node_mask,
                            waterline_halo(mid.h, bc, phys.eps_dry));
    const std::vector<double> qn = cell_to_node(mid.q, bc, Parity::odd);
    std::vector<double> dqn = rk4_step(qn, dt, rhs);
    for (std::size_t i = 0; i < dqn.size(); ++i) dqn[i] -= qn[i];
    // Send only the increment back to the cells: the node/cell round trip is
    // a reprojection, not an identity, and applying it to the full discharge
    // would deposit momentum on cells whose nodes the substep never touched
    // (retired waterline nodes in particular). With the increment, quiet
    // regions come through bit-exact.
    const std::vector<double> dqbar = node_to_cell(dqn, bc, Parity::odd);
    for (std::size_t j = 0; j < mid.q.size(); ++j) mid.q[j] += dqbar[j];
    return mid;
}

} // namespace

StepOutcome strang_step(const CellState& s, double dt, const Bathymetry& bathy, BcPair bc,
                        const Physics& phys, const BreakingConfig& breaking, bool dispersive) {
    phys.validate();
    detail::require(dt > 0.0, "strang_step: dt must be positive");
    const auto hyperbolic = [&](const CellState& y) { return nswe_rhs(y, bathy, bc, phys); };

    CellState mid = rk4_step(s, 0.5 * dt, hyperbolic);
    BreakingMask mask = detect_breaking(s, mid, 0.5 * dt, bathy, phys, bc, breaking);

    const bool masked_everywhere = !dispersive || mask.all_nodes();
    if (!(masked_everywhere && phys.f == 0.0)) {
        std::vector<char> node_mask = mask.node;
        if (!dispersive) node_mask.assign(node_mask.size(), 1);
        mid = dispersive_substep(std::move(mid), dt, node_mask, bathy, bc, phys);
    }

    StepOutcome out;
    out.state = rk4_step(mid, 0.5 * dt, hyperbolic);
    clamp_dry(out.state, phys.eps_dry);
    out.mask = std::move(mask);
    return out;
}

namespace {

StepRecord make_record(double t, double dt, const CellState& s, const BreakingMask& mask,
                       const Bathymetry& bathy, const Physics& phys) {
    StepRecord rec;
    rec.t = t;
    rec.dt = dt;
    const std::vector<double> e = cell_energy(s, bathy, phys);
    for (std::size_t j = 0; j < s.h.size(); ++j) {
        rec.mass += s.h[j] * bathy.dx;
        rec.momentum += s.q[j] * bathy.dx;
        rec.energy += e[j] * bathy.dx;
    }
    rec.flagged_cells = static_cast<int>(std::count(mask.cell.begin(), mask.cell.end(), char(1)));
    return rec;
}

// h_scale is the deepest initial column: a fixed yardstick, so a genuine
// blow-up cannot hide by inflating the reference as it grows.
void check_stability(const CellState& s, double t, const Physics& phys, double h_scale) {
    double hmax = 0.0, umax = 0.0;
    for (std::size_t j = 0; j < s.h.size(); ++j) {
        if (!std::isfinite(s.h[j]) || !std::isfinite(s.q[j]))
            throw numerical_error("run: state is not finite at t = " + std::to_string(t));
        hmax = std::max(hmax, s.h[j]);
        umax = std::max(umax, std::abs(velocity(s.h[j], s.q[j], phys.eps_dry)));
    }
    if (hmax > 1e3 * h_scale || umax > 100.0 * std::sqrt(phys.g * h_scale))
        throw numerical_error("run: blow-up at t = " + std::to_string(t));
}

} // namespace

RunResult run_simulation(CellState initial, const Bathymetry& bathy, BcPair bc,
                         const Physics& phys, const TimeControl& ctl,
                         const StepObserver& observer) {
    phys.validate();
    ctl.validate();
    detail::require(initial.h.size() == initial.q.size() &&
                        initial.h.size() == bathy.cell.size(),
                    "run: state does not match the grid");

    RunResult res;
    res.state = std::move(initial);
    clamp_dry(res.state, phys.eps_dry);
    const double h_scale = *std::max_element(res.state.h.begin(), res.state.h.end());

    BreakingMask empty;
    empty.cell.assign(res.state.h.size(), 0);
    empty.node.assign(res.state.h.size() + 1, 0);
    res.series.push_back(make_record(0.0, 0.0, res.state, empty, bathy, phys));
    if (observer) observer(0, 0.0, res.state, empty);

    const double tiny = 1e-12 * std::max(1.0, ctl.t_end);
    while (res.t < ctl.t_end - tiny) {
        double dt = ctl.fixed_dt > 0.0
                        ? ctl.fixed_dt
                        : std::min(cfl_dt(res.state, bathy.dx, phys, ctl.cfl), ctl.max_dt);
        const bool last = res.t + dt >= ctl.t_end - tiny;
        if (last) dt = ctl.t_end - res.t;

        StepOutcome out = strang_step(res.state, dt, bathy, bc, phys, ctl.breaking,
                                      ctl.dispersive);
        res.state = std::move(out.state);
        res.t = last ? ctl.t_end : res.t + dt;
        ++res.n_steps;

        check_stability(res.state, res.t, phys, h_scale);
        res.series.push_back(make_record(res.t, dt, res.state, out.mask, bathy, phys));
        if (observer) observer(res.n_steps, res.t, res.state, out.mask);
    }
    return res;
}

} // namespace gnwave

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"
#include "gnwave/breaking.hpp"
#include "gnwave/physics.hpp"
#include "gnwave/state.hpp"

namespace gnwave {

/// h <= eps_dry becomes a motionless film: h = eps_dry, q = 0. Inclusive so
/// a cell parked exactly at the threshold cannot hold on to stale momentum.
void clamp_dry(CellState& s, double eps_dry);

/// dt = cfl * dx / max over wet cells of (|u| + sqrt(g h)). Errors if the
/// whole domain is dry.
double cfl_dt(const CellState& s, double dx, const Physics& phys, double cfl);

struct StepOutcome {
    CellState state;
    BreakingMask mask;
};

/// One split step: half a hyperbolic step, breaking detection on that
/// predictor, the dispersive correction on nodal fields (surface converts
/// with even parity and anchors the nodal water column, discharge with odd
/// parity; only the discharge returns to cell averages since the column is
/// frozen), half a hyperbolic step, dry clamping.
///
/// `dispersive = false` masks every node, leaving two hyperbolic half-steps
/// plus friction. When the effective mask covers all nodes and f = 0 the
/// dispersive stage is the identity and is skipped outright, so that limit is
/// bit-identical to running the hyperbolic scheme alone.
StepOutcome strang_step(const CellState& s, double dt, const Bathymetry& bathy, BcPair bc,
                        const Physics& phys, const BreakingConfig& breaking,
                        bool dispersive = true);

struct TimeControl {
    double t_end = 0.0;
    double fixed_dt = 0.0; // > 0: unconditional step size
    double cfl = 0.95;     // used when fixed_dt == 0
    double max_dt = std::numeric_limits<double>::infinity();
    bool dispersive = true;
    BreakingConfig breaking;

    void validate() const {
        detail::require(t_end >= 0.0, "time control: t_end must be >= 0");
        detail::require(fixed_dt >= 0.0, "time control: fixed_dt must be >= 0");
        detail::require(fixed_dt > 0.0 || (cfl > 0.0 && cfl <= 1.0),
                        "time control: cfl must be in (0, 1]");
        detail::require(max_dt > 0.0, "time control: max_dt must be positive");
    }
};

struct StepRecord {
    double t = 0.0;
    double dt = 0.0;
    double mass = 0.0;     // integral of h
    double momentum = 0.0; // integral of q
    double energy = 0.0;   // integral of E
    int flagged_cells = 0;
};

/// Called after the initial clamp (step 0, empty mask) and after every step.
using StepObserver = std::function<void(int step, double t, const CellState&, const BreakingMask&)>;

struct RunResult {
    CellState state;
    double t = 0.0;
    int n_steps = 0;
    std::vector<StepRecord> series; // [0] is the clamped initial state
};

/// March strang_step to t_end (final step truncated to land exactly).
/// The initial state is clamped before the first record, so conservation
/// statements hold relative to series.front(). Aborts with the failure time
/// when the state stops being finite or leaves physical bounds measured
/// against the initial maximum depth (u beyond 100 sqrt(g h_scale) or h
/// beyond 1e3 h_scale).
RunResult run_simulation(CellState initial, const Bathymetry& bathy, BcPair bc,
                         const Physics& phys, const TimeControl& ctl,
                         const StepObserver& observer = {});

} // namespace gnwave

#pragma once

#include <string>
#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/breaking.hpp"
#include "gnwave/grid.hpp"
#include "gnwave/state.hpp"
#include "gnwave/stepper.hpp"

namespace gnwave {

// All CSV output uses %.17g so that values round-trip to the same double.
// Output is byte-identical across runs with the same inputs.

// Returns the directory runs should write into: the GNWAVE_OUTPUT_DIR
// environment variable when set and non-empty, otherwise `configured`.
std::string resolve_output_dir(const std::string& configured);

std::string format_full(double v);

// Writes <dir>/snapshots/t=<t>.csv with one row per cell:
// x,b,h,u,zeta,breaking_flag.  The time in the filename is fixed-point with
// six decimals, which is enough to keep distinct snapshot times distinct for
// any sane dt.
void write_snapshot(const std::string& dir, double t, const Grid& grid,
                    const Bathymetry& bathy, const CellState& state,
                    const std::vector<char>& cell_mask, const Physics& phys);

// Samples a cell-average field at position x.  Node values are taken as the
// mean of the two adjacent cell averages (one-sided at the ends) and the
// result is linear between nodes.  x is clamped to the domain.
double sample_linear(const Grid& grid, const std::vector<double>& cell_values,
                     double x);

struct GaugeSample {
    double t = 0;
    int gauge_id = 0;
    double h = 0;
    double u = 0;
    double zeta = 0;
};

GaugeSample sample_gauge(const Grid& grid, const Bathymetry& bathy,
                         const CellState& state, const Physics& phys,
                         double t, int gauge_id, double x);

// Writes <dir>/gauges.csv with header t,gauge_id,h,u,zeta.
void write_gauges(const std::string& dir, const std::vector<GaugeSample>& samples);

// Writes <dir>/summary.csv with header t,mass,momentum,energy,flagged_cells.
void write_summary(const std::string& dir, const std::vector<StepRecord>& series);

}  // namespace gnwave

#pragma once

#include <string>
#include <vector>

#include "gnwave/boundary.hpp"
#include "gnwave/grid.hpp"
#include "gnwave/state.hpp"

namespace gnwave {

/// One period of an imported steady wave profile. The file format is
///   # T=<s> c=<m/s> h0=<m>
///   x,h,u
/// with strictly increasing x covering one full wavelength, first and last
/// rows one wavelength apart (duplicated endpoint; h and u must match there).
struct ReferenceWave {
    double period = 0.0;
    double celerity = 0.0;
    double h0 = 0.0;
    std::vector<double> x;
    std::vector<double> h;
    std::vector<double> u;

    double wavelength() const { return x.back() - x.front(); }
};

ReferenceWave load_reference_wave(const std::string& path);

/// Degree-4 Lagrange interpolation of one stored field (w.h or w.u) at xq,
/// wrapping periodically.
double sample_reference(const ReferenceWave& w, const std::vector<double>& field, double xq);

/// Nodal samples converted to cell averages: h with even parity, q = h*u with
/// odd parity.
CellState reference_initial_state(const ReferenceWave& w, const Grid& grid, BcPair bc);

} // namespace gnwave

#pragma once

#include <vector>

#include "gnwave/boundary.hpp"

namespace gnwave {

/// Centered fourth-order finite-difference derivative of a nodal field.
/// order 1: (-w_{i+2} + 8 w_{i+1} - 8 w_{i-1} + w_{i-2}) / (12 dx)
/// order 2: (-w_{i+2} + 16 w_{i+1} - 30 w_i + 16 w_{i-1} - w_{i-2}) / (12 dx^2)
/// order 3: (-w_{i+3} + 8 w_{i+2} - 13 w_{i+1} + 13 w_{i-1} - 8 w_{i-2} + w_{i-3}) / (8 dx^3)
/// Boundary closure by ghost images per `bc`/`p`.
std::vector<double> fd_derivative(const std::vector<double>& w, int order, double dx,
                                  BcPair bc, Parity p);

} // namespace gnwave

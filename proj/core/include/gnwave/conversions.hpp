#pragma once

#include <vector>

#include "gnwave/boundary.hpp"

namespace gnwave {

/// Cell averages -> nodal point values, fourth order.
/// Solves the compact tridiagonal relation
///   (1/6) w_{i-1} + (2/3) w_i + (1/6) w_{i+1} = (ubar_i + ubar_{i+1}) / 2
/// for all nodes, with out-of-range entries closed by the ghost relations of
/// `bc`/`p` (coefficients folded back into the matrix, ghost cells on the
/// right-hand side). For periodic boundaries node N is identified with node 0.
std::vector<double> cell_to_node(const std::vector<double>& cell, BcPair bc, Parity p);

/// Nodal point values -> cell averages, fourth order (explicit 4-point rule):
///   ubar_i = (-w_{i-2} + 13 w_{i-1} + 13 w_i - w_{i+1}) / 24
/// indexed so that cell i spans nodes i-1..i.
std::vector<double> node_to_cell(const std::vector<double>& node, BcPair bc, Parity p);

} // namespace gnwave

#pragma once

#include <vector>

#include "gnwave/boundary.hpp"

namespace gnwave {

/// Three-argument slope limiter:
///   L(u, v, w) = 0                                if u*v <= 0
///              = sign(u) * min(2|u|, 2|v|, |w|)   otherwise
/// The third argument is the unlimited high-order gradient; its magnitude is
/// compared so decreasing profiles limit symmetrically to increasing ones.
double limiter(double u, double v, double w);

// Unlimited five-cell gradients of the low-dissipation reconstruction
// (nu = 1/3, xi_c = -1/10, xi_d = -1/15). `w` must be valid at i-2..i+2.
double interp_plus(const std::vector<double>& w, int i); // right-edge gradient
double interp_min(const std::vector<double>& w, int i);  // left-edge gradient

/// Limited edge values per cell:
///   right_i = w_i + L(d-, d+, interp_plus) / 2
///   left_i  = w_i - L(d+, d-, interp_min) / 2
/// with d+ = w_{i+1} - w_i, d- = w_i - w_{i-1}.
struct EdgeValues {
    std::vector<double> left;
    std::vector<double> right;
};

EdgeValues limited_edges(const std::vector<double>& cell, BcPair bc, Parity p);

namespace detail {
// Edge values for `count` cells of an already padded array starting at index
// `first` (needs ext[first-2 .. first+count+1]). `zero_slope`, if non-null,
// forces first-order reconstruction per cell (near-dry gating).
EdgeValues limited_edges_padded(const std::vector<double>& ext, int first, int count,
                                const std::vector<char>* zero_slope);
} // namespace detail

} // namespace gnwave

#pragma once

#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"

namespace gnwave {

/// T[h,b] w = -(h^2/3) w_xx - h h_x w_x + (zeta_x b_x + (h/2) b_xx) w
/// evaluated nodally with the fourth-order stencils; zeta = h + b - h0.
/// `wp` is the wall parity of w (odd for discharge-like arguments).
std::vector<double> apply_T(const std::vector<double>& w, Parity wp,
                            const std::vector<double>& h_node, const Bathymetry& bathy,
                            BcPair bc);

/// Q1[h,b](u) = 2 h (h_x + b_x/2) u_x^2 + (4/3) h^2 u_x u_xx
///            + h b_xx u u_x + (zeta_x b_xx + (h/2) b_xxx) u^2
std::vector<double> eval_Q1(const std::vector<double>& u, const std::vector<double>& h_node,
                            const Bathymetry& bathy, BcPair bc);

} // namespace gnwave

#pragma once

#include "gnwave/error.hpp"

namespace gnwave {

struct Physics {
    double g = 9.81;       // gravity [m/s^2]
    double alpha = 1.159;  // dispersion tuning parameter, >= 1
    double f = 0.0;        // quadratic bottom friction coefficient
    double rho = 1000.0;   // water density [kg/m^3]
    double eps_dry = 1e-6; // dry threshold on h [m]

    void validate() const {
        detail::require(g > 0.0, "physics: g must be positive");
        detail::require(alpha >= 1.0, "physics: alpha must be >= 1");
        detail::require(f >= 0.0, "physics: friction coefficient must be >= 0");
        detail::require(rho > 0.0, "physics: rho must be positive");
        detail::require(eps_dry > 0.0, "physics: eps_dry must be positive");
    }
};

} // namespace gnwave

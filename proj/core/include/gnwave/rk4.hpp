#pragma once

#include "gnwave/state.hpp" // axpy overloads for the solver's own state types

namespace gnwave {

/// Classical four-stage Runge-Kutta step for an autonomous system
/// dy/dt = rhs(y). State needs an axpy(y, a, k) found by ADL.
template <typename State, typename Rhs>
State rk4_step(const State& y, double dt, Rhs&& rhs) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, 0.5 * dt, k1));
    const State k3 = rhs(axpy(y, 0.5 * dt, k2));
    const State k4 = rhs(axpy(y, dt, k3));
    State out = axpy(y, dt / 6.0, k1);
    out = axpy(out, dt / 3.0, k2);
    out = axpy(out, dt / 3.0, k3);
    out = axpy(out, dt / 6.0, k4);
    return out;
}

} // namespace gnwave

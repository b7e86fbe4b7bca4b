#pragma once

#include "gnwave/error.hpp"

namespace gnwave {

/// One linear plane-wave configuration. dt = 0 selects the time-continuous
/// relation; dt > 0 adds the second-order splitting correction.
struct DispersionQuery {
    double kh0 = 1.0; // relative depth k*h0 > 0
    double h0 = 1.0;  // [m]
    double g = 9.81;  // [m/s^2]
    double alpha = 1.0;
    double dt = 0.0; // [s]

    void validate() const {
        detail::require(kh0 > 0.0, "dispersion: kh0 must be positive");
        detail::require(h0 > 0.0, "dispersion: h0 must be positive");
        detail::require(g > 0.0, "dispersion: g must be positive");
        detail::require(alpha >= 1.0, "dispersion: alpha must be >= 1");
        detail::require(dt >= 0.0, "dispersion: dt must be >= 0");
    }
};

/// Positive branch of the model's linear relation,
///   omega = k sqrt(g h0) sqrt[(1 + (alpha-1)(kh0)^2/3) / (1 + alpha (kh0)^2/3)].
double omega_gn(const DispersionQuery& q);
double phase_velocity_gn(const DispersionQuery& q); // omega / k
double group_velocity_gn(const DispersionQuery& q); // analytic d omega / dk

/// Time-discretized relation: omega_gn plus the quadratic-in-dt shift
///   (dt^2/24) omega^3 [ (kh0)^2 / (3 + (alpha-1)(kh0)^2) ]^2.
double omega_semidiscrete(const DispersionQuery& q);
double phase_velocity_semidiscrete(const DispersionQuery& q);
double group_velocity_semidiscrete(const DispersionQuery& q);

struct StokesReference {
    double phase; // sqrt(g h0 tanh(kh0)/kh0)
    double group; // phase/2 * (1 + 2 kh0 / sinh(2 kh0))
};
StokesReference stokes_reference(double kh0, double h0, double g);

enum class VelocityComponents { phase_only, phase_and_group };

/// Integrated relative-error objective over kh0, weighted by 1/kh0:
///   J(alpha) = int_{kh_min}^{kh_max} sum_c [(C_c - C_S,c)/C_S,c]^2 / kh0 d(kh0).
/// The integrand vanishes like kh0^4 at the origin, so the small lower cutoff
/// only dodges the 1/kh0 weight. Works in g = h0 = 1 units; time steps are
/// the dimensionless dt*sqrt(g/h0).
///
/// The phase-only mix reproduces the target optimum 1.159 for dt = 0;
/// adding group velocity shifts it near 1.139, so phase_only is the default.
struct AlphaObjective {
    double kh_min = 0.005;
    double kh_max = 4.0;
    double kh_step = 0.005; // trapezoid step
    VelocityComponents components = VelocityComponents::phase_only;

    void validate() const {
        detail::require(kh_min > 0.0 && kh_max > kh_min, "alpha objective: bad kh0 range");
        detail::require(kh_step > 0.0 && kh_step <= kh_max - kh_min,
                        "alpha objective: bad quadrature step");
    }
};

double alpha_objective_value(const AlphaObjective& obj, double alpha, double dt_tilde);

/// Golden-section minimum of the integrated objective over alpha in [1, 3].
double optimize_alpha(const AlphaObjective& obj, double dt_tilde = 0.0);

/// Pointwise phase-velocity match at a single kh0 (dimensional dt, h0, g),
/// again restricted to alpha >= 1.
double optimize_alpha_local(double kh0, double dt, double h0, double g);

} // namespace gnwave

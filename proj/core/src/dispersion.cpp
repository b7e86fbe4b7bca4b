#include "gnwave/dispersion.hpp"

#include <cmath>

namespace gnwave {

namespace {

// R(s) = sqrt(N/D), N = 1 + (alpha-1)s^2/3, D = 1 + alpha s^2/3, s = kh0.
double ratio_R(double s, double alpha) {
    const double s2 = s * s;
    return std::sqrt((1.0 + (alpha - 1.0) * s2 / 3.0) / (1.0 + alpha * s2 / 3.0));
}

// B(s) = s^2 / (3 + (alpha-1) s^2); the dt^2 correction carries B^2.
double bracket_B(double s, double alpha) {
    return s * s / (3.0 + (alpha - 1.0) * s * s);
}

template <typename F>
double golden_min(F f, double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double omega_gn(const DispersionQuery& q) {
    q.validate();
    const double k = q.kh0 / q.h0;
    return k * std::sqrt(q.g * q.h0) * ratio_R(q.kh0, q.alpha);
}

double phase_velocity_gn(const DispersionQuery& q) {
    q.validate();
    return std::sqrt(q.g * q.h0) * ratio_R(q.kh0, q.alpha);
}

double group_velocity_gn(const DispersionQuery& q) {
    q.validate();
    const double s = q.kh0;
    const double R = ratio_R(s, q.alpha);
    const double D = 1.0 + q.alpha * s * s / 3.0;
    // R'(s) = -s / (3 R D^2); d omega/dk = sqrt(g h0) (R + s R').
    return std::sqrt(q.g * q.h0) * (R - s * s / (3.0 * R * D * D));
}

double omega_semidiscrete(const DispersionQuery& q) {
    const double w = omega_gn(q);
    const double B = bracket_B(q.kh0, q.alpha);
    return w + q.dt * q.dt / 24.0 * w * w * w * B * B;
}

double phase_velocity_semidiscrete(const DispersionQuery& q) {
    return omega_semidiscrete(q) * q.h0 / q.kh0;
}

double group_velocity_semidiscrete(const DispersionQuery& q) {
    const double w = omega_gn(q);
    const double wk = group_velocity_gn(q);
    const double s = q.kh0;
    const double B = bracket_B(s, q.alpha);
    const double den = 3.0 + (q.alpha - 1.0) * s * s;
    const double Bp = 6.0 * s / (den * den); // dB/ds
    const double dt2 = q.dt * q.dt;
    return wk * (1.0 + dt2 / 8.0 * w * w * B * B) + dt2 / 12.0 * w * w * w * B * Bp * q.h0;
}

StokesReference stokes_reference(double kh0, double h0, double g) {
    detail::require(kh0 > 0.0 && h0 > 0.0 && g > 0.0, "stokes reference: bad arguments");
    const double phase = std::sqrt(g * h0 * std::tanh(kh0) / kh0);
    return {phase, 0.5 * phase * (1.0 + 2.0 * kh0 / std::sinh(2.0 * kh0))};
}

double alpha_objective_value(const AlphaObjective& obj, double alpha, double dt_tilde) {
    obj.validate();
    detail::require(alpha >= 1.0, "alpha objective: alpha must be >= 1");
    detail::require(dt_tilde >= 0.0, "alpha objective: dt must be >= 0");

    const auto integrand = [&](double s) {
        const DispersionQuery q{s, 1.0, 1.0, alpha, dt_tilde};
        const StokesReference ref = stokes_reference(s, 1.0, 1.0);
        const double ep = (phase_velocity_semidiscrete(q) - ref.phase) / ref.phase;
        double val = ep * ep;
        if (obj.components == VelocityComponents::phase_and_group) {
            const double eg = (group_velocity_semidiscrete(q) - ref.group) / ref.group;
            val += eg * eg;
        }
        return val / s;
    };

    const int n = static_cast<int>(std::lround((obj.kh_max - obj.kh_min) / obj.kh_step));
    const double step = (obj.kh_max - obj.kh_min) / n;
    double sum = 0.5 * (integrand(obj.kh_min) + integrand(obj.kh_max));
    for (int i = 1; i < n; ++i) sum += integrand(obj.kh_min + i * step);
    const double j = sum * step;
    if (!std::isfinite(j)) throw numerical_error("alpha objective: non-finite value");
    return j;
}

double optimize_alpha(const AlphaObjective& obj, double dt_tilde) {
    return golden_min([&](double a) { return alpha_objective_value(obj, a, dt_tilde); }, 1.0,
                      3.0, 1e-6);
}

double optimize_alpha_local(double kh0, double dt, double h0, double g) {
    detail::require(kh0 > 0.0, "alpha local: kh0 must be positive");
    const StokesReference ref = stokes_reference(kh0, h0, g);
    const auto err = [&](double a) {
        const DispersionQuery q{kh0, h0, g, a, dt};
        const double e = (phase_velocity_semidiscrete(q) - ref.phase) / ref.phase;
        return e * e;
    };
    return golden_min(err, 1.0, 3.0, 1e-6);
}

} // namespace gnwave

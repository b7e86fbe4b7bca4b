#pragma once

namespace gnwave {

struct Flux {
    double mass = 0.0;
    double momentum = 0.0;
};

/// Physical flux f(h, q) = (q, q*u + g h^2 / 2) with a dry velocity guard.
Flux physical_flux(double h, double q, double g, double eps);

/// Two-speed approximate Riemann flux (HLL) with Einfeldt-type wave-speed
/// bounds and dry-front speed estimates. Consistent (F(w,w) = f(w)),
/// positivity-preserving under the usual CFL restriction, and safe for
/// h = 0 on either side. States with h <= eps are treated as dry.
/// Throws on NaN or negative depth input.
Flux numerical_flux(double hL, double qL, double hR, double qR, double g, double eps);

} // namespace gnwave

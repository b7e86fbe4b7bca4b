#include "gnwave/riemann.hpp"

#include <cmath>

#include "gnwave/error.hpp"
#include "gnwave/state.hpp"

namespace gnwave {

Flux physical_flux(double h, double q, double g, double eps) {
    const double u = velocity(h, q, eps);
    return {q, q * u + 0.5 * g * h * h};
}

Flux numerical_flux(double hL, double qL, double hR, double qR, double g, double eps) {
    if (std::isnan(hL) || std::isnan(qL) || std::isnan(hR) || std::isnan(qR))
        throw numerical_error("numerical_flux: NaN input state");
    if (hL < 0.0 || hR < 0.0) throw error("numerical_flux: negative depth");

    const bool dryL = !(hL > eps);
    const bool dryR = !(hR > eps);
    if (dryL && dryR) return {0.0, 0.0};

    const double uL = velocity(hL, qL, eps);
    const double uR = velocity(hR, qR, eps);
    const double cL = std::sqrt(g * hL);
    const double cR = std::sqrt(g * hR);

    double sL, sR;
    if (dryL) { // wet front expanding left
        sL = uR - 2.0 * cR;
        sR = uR + cR;
    } else if (dryR) { // wet front expanding right
        sL = uL - cL;
        sR = uL + 2.0 * cL;
    } else {
        const double wl = std::sqrt(hL), wr = std::sqrt(hR);
        const double u_roe = (wl * uL + wr * uR) / (wl + wr);
        const double c_roe = std::sqrt(0.5 * g * (hL + hR));
        sL = std::min(uL - cL, u_roe - c_roe);
        sR = std::max(uR + cR, u_roe + c_roe);
    }

    const Flux fL = physical_flux(hL, qL, g, eps);
    const Flux fR = physical_flux(hR, qR, g, eps);
    if (sL >= 0.0) return fL;
    if (sR <= 0.0) return fR;
    const double inv = 1.0 / (sR - sL);
    return {(sR * fL.mass - sL * fR.mass + sL * sR * (hR - hL)) * inv,
            (sR * fL.momentum - sL * fR.momentum + sL * sR * (qR - qL)) * inv};
}

} // namespace gnwave

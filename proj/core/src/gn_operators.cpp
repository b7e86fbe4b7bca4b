#include "gnwave/gn_operators.hpp"

#include "gnwave/error.hpp"
#include "gnwave/fd_stencils.hpp"

namespace gnwave {

std::vector<double> apply_T(const std::vector<double>& w, Parity wp,
                            const std::vector<double>& h_node, const Bathymetry& bathy,
                            BcPair bc) {
    const std::size_t n = w.size();
    detail::require(h_node.size() == n && bathy.node.size() == n, "apply_T: size mismatch");
    const double dx = bathy.dx;
    const std::vector<double> wx = fd_derivative(w, 1, dx, bc, wp);
    const std::vector<double> wxx = fd_derivative(w, 2, dx, bc, wp);
    const std::vector<double> hx = fd_derivative(h_node, 1, dx, bc, Parity::even);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = h_node[i];
        const double zx = hx[i] + bathy.dbdx[i]; // zeta_x = h_x + b_x
        out[i] = -(h * h / 3.0) * wxx[i] - h * hx[i] * wx[i] +
                 (zx * bathy.dbdx[i] + 0.5 * h * bathy.d2bdx2[i]) * w[i];
    }
    return out;
}

std::vector<double> eval_Q1(const std::vector<double>& u, const std::vector<double>& h_node,
                            const Bathymetry& bathy, BcPair bc) {
    const std::size_t n = u.size();
    detail::require(h_node.size() == n && bathy.node.size() == n, "eval_Q1: size mismatch");
    const double dx = bathy.dx;
    const std::vector<double> ux = fd_derivative(u, 1, dx, bc, Parity::odd);
    const std::vector<double> uxx = fd_derivative(u, 2, dx, bc, Parity::odd);
    const std::vector<double> hx = fd_derivative(h_node, 1, dx, bc, Parity::even);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = h_node[i];
        const double zx = hx[i] + bathy.dbdx[i];
        out[i] = 2.0 * h * (hx[i] + 0.5 * bathy.dbdx[i]) * ux[i] * ux[i] +
                 (4.0 / 3.0) * h * h * ux[i] * uxx[i] + h * bathy.d2bdx2[i] * u[i] * ux[i] +
                 (zx * bathy.d2bdx2[i] + 0.5 * h * bathy.d3bdx3[i]) * u[i] * u[i];
    }
    return out;
}

} // namespace gnwave

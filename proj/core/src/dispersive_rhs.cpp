#include "gnwave/dispersive_rhs.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gnwave/error.hpp"
#include "gnwave/fd_stencils.hpp"
#include "gnwave/gn_operators.hpp"
#include "gnwave/state.hpp"

namespace gnwave {

DispersiveRhs::DispersiveRhs(std::vector<double> zeta_node, const Bathymetry& bathy,
                             const Physics& phys, BcPair bc, std::vector<char> node_mask,
                             std::vector<char> node_halo)
    : bathy_(&bathy), phys_(phys), bc_(bc), mask_(std::move(node_mask)) {
    phys_.validate();
    const int nn = static_cast<int>(zeta_node.size());
    detail::require(static_cast<int>(bathy.node.size()) == nn,
                    "dispersive rhs: bathymetry does not match the nodal grid");
    detail::require(static_cast<int>(mask_.size()) == nn, "dispersive rhs: mask size mismatch");
    detail::require(node_halo.empty() || static_cast<int>(node_halo.size()) == nn,
                    "dispersive rhs: halo size mismatch");

    h_.resize(nn);
    for (int i = 0; i < nn; ++i)
        h_[i] = std::max(zeta_node[i] - bathy.node[i] + bathy.h0, 0.0);

    retired_.resize(nn);
    for (int i = 0; i < nn; ++i)
        retired_[i] = (h_[i] <= phys_.eps_dry || (!node_halo.empty() && node_halo[i])) ? 1 : 0;
    if (is_periodic(bc_)) {
        const char r = retired_[0] || retired_[nn - 1];
        retired_[0] = retired_[nn - 1] = r;
    }

    const std::vector<double> zx = fd_derivative(zeta_node, 1, bathy.dx, bc_, Parity::even);
    slope_.resize(nn);
    for (int i = 0; i < nn; ++i) slope_[i] = phys_.g / phys_.alpha * zx[i];

    inert_.resize(nn);
    all_inert_ = true;
    for (int i = 0; i < nn; ++i) {
        inert_[i] = (mask_[i] || retired_[i]) ? 1 : 0;
        if (!inert_[i]) all_inert_ = false;
    }

    if (!all_inert_)
        fact_ = assemble_elliptic(h_, bathy, phys_.alpha, bc_, phys_.eps_dry, retired_);
}

std::vector<double> DispersiveRhs::operator()(const std::vector<double>& q_node) const {
    const int nn = static_cast<int>(h_.size());
    detail::require(static_cast<int>(q_node.size()) == nn, "dispersive rhs: q size mismatch");

    // Retired nodes contribute no velocity anywhere (Q1 stencils, friction):
    // near the waterline the nodal discharge and the nodal column are not
    // consistent enough for their ratio to stay bounded.
    std::vector<double> u(nn);
    for (int i = 0; i < nn; ++i)
        u[i] = retired_[i] ? 0.0 : velocity(h_[i], q_node[i], phys_.eps_dry);

    std::vector<double> dq(nn, 0.0);
    if (all_inert_) {
        for (int i = 0; i < nn; ++i)
            if (!retired_[i]) dq[i] = -phys_.f * u[i] * std::abs(u[i]);
        return dq;
    }

    std::vector<double> scaled = eval_Q1(u, h_, *bathy_, bc_);
    for (int i = 0; i < nn; ++i) scaled[i] += slope_[i];
    const std::vector<double> w = fact_.solve_scaled(std::move(scaled));

    for (int i = 0; i < nn; ++i) {
        if (retired_[i]) continue;
        const double friction = -phys_.f * u[i] * std::abs(u[i]);
        dq[i] = mask_[i] ? friction : h_[i] * (slope_[i] - w[i]) + friction;
    }
    return dq;
}

} // namespace gnwave

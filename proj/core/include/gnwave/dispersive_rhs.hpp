#pragma once

#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"
#include "gnwave/elliptic.hpp"
#include "gnwave/physics.hpp"

namespace gnwave {

/// Right-hand side of the dispersive substep: the water column is frozen and
/// only the nodal discharge evolves,
///
///   dq/dt = (1/alpha) g h zeta_x - Z - f u |u|,   A Z = (1/alpha) g h zeta_x + h Q1(u)
///
/// where A is the assembled elliptic operator. Nodes flagged as breaking drop
/// the dispersive correction and keep only friction; dry nodes do not move.
///
/// The surface zeta_node is the primary input: h = max(zeta - b + h0, 0) is
/// derived from it, and the pressure gradient is the derivative of the
/// surface itself, so a flat surface yields an exactly zero right-hand side
/// whatever the bathymetry (including emerged beaches, where a clamped-h
/// formulation would see a kink at the shoreline).
///
/// The elliptic right-hand side carries a factor of h analytically, so the
/// solve runs on the scaled system (see EllipticFactorization) and the
/// update is h * ((g/alpha) zeta_x - w): every term shuts off smoothly
/// toward the shoreline.
///
/// The factorization is built once per construction (h does not change
/// between the Runge-Kutta stages that share this object). When every node
/// is masked or dry the correction is never evaluated, so the elliptic
/// system is not even assembled and only friction remains.
///
/// node_halo widens the dry set: flagged nodes are retired from the
/// dispersive operator altogether (update 0, no coupling, velocity treated
/// as 0 inside Q1). The stepper flags nodes around the waterline, where the
/// nodal discharge and the nodal column come from different conversions and
/// their ratio is not a velocity the flow bounds.
class DispersiveRhs {
  public:
    DispersiveRhs(std::vector<double> zeta_node, const Bathymetry& bathy, const Physics& phys,
                  BcPair bc, std::vector<char> node_mask, std::vector<char> node_halo = {});

    std::vector<double> operator()(const std::vector<double>& q_node) const;

    const std::vector<double>& h_node() const { return h_; }
    const EllipticFactorization& factorization() const { return fact_; }

  private:
    const Bathymetry* bathy_;
    Physics phys_;
    BcPair bc_;
    std::vector<double> h_;
    std::vector<char> mask_;
    std::vector<char> retired_;    // dry or halo: removed from the operator
    std::vector<double> slope_;    // (g/alpha) zeta_x, fixed while h is frozen
    std::vector<char> inert_;      // masked or retired: no dispersive correction
    bool all_inert_ = false;
    EllipticFactorization fact_;   // empty when all_inert_
};

} // namespace gnwave

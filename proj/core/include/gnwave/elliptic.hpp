#pragma once

#include <memory>
#include <vector>

#include "gnwave/bathymetry.hpp"
#include "gnwave/boundary.hpp"

namespace gnwave {

/// LU factorization of the nodal operator  v  ->  v + alpha * h * T[h,b](v/h),
/// pentadiagonal from the fourth-order stencils, with boundary coefficients
/// folded per the ghost relations (odd parity: the operand is discharge-like)
/// and wrap-around entries for periodic runs. Nodes with h <= eps_dry are
/// removed: their rows become identity, their right-hand sides are zeroed on
/// solve, and wet rows skip contributions from dry columns.
///
/// Internally the system is assembled for w = v/h, i.e. (I + alpha T) w =
/// rhs/h, which is the same operator conjugated by diag(h). Every matrix
/// entry then vanishes smoothly as h -> 0, so a shoreline of barely-wet
/// nodes cannot degrade the factorization the way the raw 1/h column
/// scaling would.
///
/// The factorization is frozen for one dispersive substep; solve() verifies
/// it still matches the h field it was built from via an exact fingerprint.
class EllipticFactorization {
  public:
    EllipticFactorization() = default;

    bool valid() const { return impl_ != nullptr; }
    int n_nodes() const;
    const std::vector<char>& dry() const;
    bool matches(const std::vector<double>& h_node) const;

    /// Solve (I + alpha h T(./h)) z = rhs (dry entries zeroed first). The
    /// physical right-hand sides carry a factor of h, so rhs/h stays bounded
    /// near shorelines; callers with the scaled form should prefer
    /// solve_scaled. Checks the residual of the scaled system and throws on
    /// failure.
    std::vector<double> solve(std::vector<double> rhs) const;

    /// Solve (I + alpha T) w = scaled, i.e. the same system with rhs = h *
    /// scaled and z = h * w already divided out. Dry entries are zeroed.
    std::vector<double> solve_scaled(std::vector<double> scaled) const;

  private:
    friend EllipticFactorization assemble_elliptic(const std::vector<double>&, const Bathymetry&,
                                                   double, BcPair, double,
                                                   const std::vector<char>&);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// force_dry (empty or one flag per node) removes additional nodes exactly
/// like h <= eps_dry does; used to retire the seam nodes around a waterline.
EllipticFactorization assemble_elliptic(const std::vector<double>& h_node,
                                        const Bathymetry& bathy, double alpha, BcPair bc,
                                        double eps_dry, const std::vector<char>& force_dry = {});

inline std::vector<double> solve_elliptic(const EllipticFactorization& fact,
                                          std::vector<double> rhs) {
    return fact.solve(std::move(rhs));
}

} // namespace gnwave

#include "gnwave/breaking.hpp"

#include <algorithm>
#include <cmath>

namespace gnwave {

bool BreakingMask::any() const {
    return std::find(cell.begin(), cell.end(), char(1)) != cell.end();
}

bool BreakingMask::all_nodes() const {
    return !node.empty() && std::find(node.begin(), node.end(), char(0)) == node.end();
}

std::vector<double> cell_energy(const CellState& s, const Bathymetry& bathy,
                                const Physics& phys) {
    const int n = static_cast<int>(s.h.size());
    std::vector<double> e(n);
    for (int j = 0; j < n; ++j) {
        const double u = velocity(s.h[j], s.q[j], phys.eps_dry);
        const double zeta = s.h[j] + bathy.cell[j] - bathy.h0;
        e[j] = 0.5 * phys.rho * (s.h[j] * u * u + phys.g * zeta * zeta);
    }
    return e;
}

std::vector<double> cell_energy_flux(const CellState& s, const Bathymetry& bathy,
                                     const Physics& phys) {
    const int n = static_cast<int>(s.h.size());
    std::vector<double> f(n);
    for (int j = 0; j < n; ++j) {
        const double u = velocity(s.h[j], s.q[j], phys.eps_dry);
        const double zeta = s.h[j] + bathy.cell[j] - bathy.h0;
        f[j] = phys.rho * s.h[j] * u * (0.5 * u * u + phys.g * zeta);
    }
    return f;
}

BreakingMask detect_breaking(const CellState& before, const CellState& after, double dt,
                             const Bathymetry& bathy, const Physics& phys, BcPair bc,
                             const BreakingConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(after.h.size());
    detail::require(static_cast<int>(before.h.size()) == n, "breaking: state size mismatch");
    detail::require(dt > 0.0, "breaking: dt must be positive");

    BreakingMask mask;
    mask.cell.assign(n, 0);
    mask.node.assign(n + 1, 0);
    if (!cfg.enabled) return mask;

    const std::vector<double> e0 = cell_energy(before, bathy, phys);
    const std::vector<double> e1 = cell_energy(after, bathy, phys);
    const std::vector<double> fe =
        extend_cells(cell_energy_flux(after, bathy, phys), 1, bc, Parity::odd);

    std::vector<double> diss(n);
    for (int j = 0; j < n; ++j) {
        diss[j] = -((e1[j] - e0[j]) / dt + (fe[j + 2] - fe[j]) / (2.0 * bathy.dx));
        mask.max_dissipation = std::max(mask.max_dissipation, diss[j]);
    }

    const double floor = cfg.floor >= 0.0
                             ? cfg.floor
                             : 1e-3 * phys.rho * phys.g * bathy.h0 *
                                   std::sqrt(phys.g * bathy.h0);
    if (mask.max_dissipation <= floor) return mask;

    std::vector<char> raw(n, 0);
    for (int j = 0; j < n; ++j) raw[j] = diss[j] > cfg.theta * mask.max_dissipation ? 1 : 0;

    const bool periodic = is_periodic(bc);
    for (int j = 0; j < n; ++j) {
        if (!raw[j]) continue;
        for (int m = -cfg.halo; m <= cfg.halo; ++m) {
            int c = j + m;
            if (periodic)
                c = ((c % n) + n) % n;
            else if (c < 0 || c >= n)
                continue;
            mask.cell[c] = 1;
        }
    }

    for (int i = 0; i <= n; ++i) {
        const bool left = i > 0 ? mask.cell[i - 1] : (periodic && mask.cell[n - 1]);
        const bool right = i < n ? mask.cell[i] : (periodic && mask.cell[0]);
        mask.node[i] = left || right ? 1 : 0;
    }
    return mask;
}

} // namespace gnwave

#include "gnwave/nswe_rhs.hpp"

#include <cmath>
#include <string>

#include "gnwave/error.hpp"
#include "gnwave/reconstruction.hpp"
#include "gnwave/riemann.hpp"

namespace gnwave {

CellState nswe_rhs(const CellState& s, const Bathymetry& bathy, BcPair bc, const Physics& phys) {
    const int n = static_cast<int>(s.h.size());
    detail::require(static_cast<int>(s.q.size()) == n && static_cast<int>(bathy.cell.size()) == n,
                    "nswe_rhs: inconsistent sizes");
    for (int i = 0; i < n; ++i)
        if (std::isnan(s.h[i]) || std::isnan(s.q[i]))
            throw numerical_error("nswe_rhs: NaN in state at cell " + std::to_string(i));

    const double g = phys.g;
    const double eps = phys.eps_dry;
    const double dx = bathy.dx;
    const double h0 = bathy.h0;
    constexpr int G = 3; // ghost layers: reconstruction on one ghost cell per side

    std::vector<double> zbar(n), ubar(n);
    for (int i = 0; i < n; ++i) {
        zbar[i] = s.h[i] + bathy.cell[i] - h0;
        ubar[i] = velocity(s.h[i], s.q[i], eps);
    }

    // Reconstruct (h, u), not (h, q): at a wetting front the two limiters
    // take different branches, and an edge pairing a near-vacuum h with a
    // bulk-sized q reports speeds of q/h and detonates the front. Edge
    // velocities stay inside the neighbouring cell range by construction,
    // and the conservative update keeps its flux form either way.
    const std::vector<double> he = extend_cells(s.h, G, bc, Parity::even);
    const std::vector<double> ue = extend_cells(ubar, G, bc, Parity::odd);
    const std::vector<double> ze = extend_cells(zbar, G, bc, Parity::even);

    // Edge values for cells -1..n (padded index first = G-1, count = n+2).
    const int count = n + 2;
    std::vector<char> gate(count);
    for (int c = 0; c < count; ++c) gate[c] = he[G - 1 + c] <= eps;
    const EdgeValues h_edge = detail::limited_edges_padded(he, G - 1, count, &gate);
    const EdgeValues u_edge = detail::limited_edges_padded(ue, G - 1, count, &gate);
    const EdgeValues z_edge = detail::limited_edges_padded(ze, G - 1, count, &gate);

    // Interface k = 0..n separates cells k-1 and k; in edge-array coordinates
    // the left side is cell c = k, the right side c = k+1.
    std::vector<double> Fm(n + 1), Fq(n + 1), corr_left(n + 1), corr_right(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double hL = h_edge.right[k], uL = u_edge.right[k], zL = z_edge.right[k];
        const double hR = h_edge.left[k + 1], uR = u_edge.left[k + 1], zR = z_edge.left[k + 1];
        const double bL = zL - hL + h0;
        const double bR = zR - hR + h0;
        const double bs = std::max(bL, bR);
        // h - (b* - b), not zeta + h0 - b*: algebraically equal, but the
        // difference with b* vanishes bit-exactly on the higher side, so a
        // clamped film between dry cells keeps h* = h exactly and stays
        // behind the dry-interface gate instead of leaking by one ulp.
        const double hLs = std::max(0.0, hL - (bs - bL));
        const double hRs = std::max(0.0, hR - (bs - bR));
        if (hLs <= eps && hRs <= eps) {
            Fm[k] = Fq[k] = 0.0; // both sides effectively dry: inert interface
        } else {
            const Flux f = numerical_flux(hLs, hLs * uL, hRs, hRs * uR, g, eps);
            Fm[k] = f.mass;
            Fq[k] = f.momentum;
        }
        // Hydrostatic flux corrections: left side belongs to cell k-1, right
        // side to cell k.
        corr_left[k] = 0.5 * g * (hL * hL - hLs * hLs);
        corr_right[k] = 0.5 * g * (hR * hR - hRs * hRs);
    }

    CellState dt;
    dt.h.resize(n);
    dt.q.resize(n);
    for (int j = 0; j < n; ++j) {
        dt.h[j] = -(Fm[j + 1] - Fm[j]) / dx;
        if (s.h[j] <= eps) {
            // Inert cell: flux only (which is zero against dry neighbours),
            // no topography source.
            dt.q[j] = -(Fq[j + 1] - Fq[j]) / dx;
            continue;
        }
        const double hl = h_edge.left[j + 1], hr = h_edge.right[j + 1];
        const double bl = z_edge.left[j + 1] - hl + h0;
        const double br = z_edge.right[j + 1] - hr + h0;
        const double centered = -g * 0.5 * (hl + hr) * (br - bl) / dx;
        // cell j sits left of interface j+1 and right of interface j
        dt.q[j] = -((Fq[j + 1] + corr_left[j + 1]) - (Fq[j] + corr_right[j])) / dx + centered;
    }
    return dt;
}

} // namespace gnwave

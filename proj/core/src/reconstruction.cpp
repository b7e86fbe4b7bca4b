#include "gnwave/reconstruction.hpp"

#include <cmath>

#include "gnwave/error.hpp"

namespace gnwave {

namespace {
constexpr double nu = 1.0 / 3.0;
constexpr double xi_c = -1.0 / 10.0;
constexpr double xi_d = -1.0 / 15.0;
} // namespace

// Three-entry limiter: inert (returns w up to sign) while u, v, w describe a
// locally monotone profile, clamps to the TVD bound 2 min(|u|, |v|) on steep
// jumps, and flattens extrema (uv <= 0). The magnitude of w is compared so
// that decreasing profiles limit symmetrically to increasing ones.
double limiter(double u, double v, double w) {
    if (u * v <= 0.0) return 0.0;
    const double m = std::min(std::min(2.0 * std::abs(u), 2.0 * std::abs(v)), std::abs(w));
    return u > 0.0 ? m : -m;
}

double interp_plus(const std::vector<double>& w, int i) {
    return (1.0 - nu) * (w[i + 1] - w[i]) + nu * (w[i] - w[i - 1]) +
           xi_c * (-w[i - 1] + 3.0 * w[i] - 3.0 * w[i + 1] + w[i + 2]) +
           xi_d * (-w[i - 2] + 3.0 * w[i - 1] - 3.0 * w[i] + w[i + 1]);
}

double interp_min(const std::vector<double>& w, int i) {
    return (1.0 - nu) * (w[i] - w[i - 1]) + nu * (w[i + 1] - w[i]) +
           xi_c * (-w[i - 2] + 3.0 * w[i - 1] - 3.0 * w[i] + w[i + 1]) +
           xi_d * (-w[i - 1] + 3.0 * w[i] - 3.0 * w[i + 1] + w[i + 2]);
}

namespace detail {

EdgeValues limited_edges_padded(const std::vector<double>& ext, int first, int count,
                                const std::vector<char>* zero_slope) {
    EdgeValues e;
    e.left.resize(count);
    e.right.resize(count);
    for (int c = 0; c < count; ++c) {
        const int i = first + c;
        if (zero_slope && (*zero_slope)[c]) {
            e.left[c] = e.right[c] = ext[i];
            continue;
        }
        const double dp = ext[i + 1] - ext[i];
        const double dm = ext[i] - ext[i - 1];
        e.right[c] = ext[i] + 0.5 * limiter(dm, dp, interp_plus(ext, i));
        e.left[c] = ext[i] - 0.5 * limiter(dp, dm, interp_min(ext, i));
    }
    return e;
}

} // namespace detail

EdgeValues limited_edges(const std::vector<double>& cell, BcPair bc, Parity p) {
    const int n = static_cast<int>(cell.size());
    gnwave::detail::require(n >= 2, "limited_edges: too few cells");
    const std::vector<double> ext = extend_cells(cell, 2, bc, p);
    return detail::limited_edges_padded(ext, 2, n, nullptr);
}

} // namespace gnwave

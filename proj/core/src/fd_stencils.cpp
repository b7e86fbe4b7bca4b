#include "gnwave/fd_stencils.hpp"

#include "gnwave/error.hpp"

namespace gnwave {

std::vector<double> fd_derivative(const std::vector<double>& w, int order, double dx,
                                  BcPair bc, Parity p) {
    detail::require(dx > 0.0, "fd_derivative: dx must be positive");
    const int n = static_cast<int>(w.size());
    std::vector<double> d(n);
    switch (order) {
        case 1: {
            const std::vector<double> e = extend_nodes(w, 2, bc, p);
            const double s = 1.0 / (12.0 * dx);
            for (int i = 0; i < n; ++i) {
                const int c = i + 2;
                d[i] = s * (-e[c + 2] + 8.0 * e[c + 1] - 8.0 * e[c - 1] + e[c - 2]);
            }
            break;
        }
        case 2: {
            const std::vector<double> e = extend_nodes(w, 2, bc, p);
            const double s = 1.0 / (12.0 * dx * dx);
            for (int i = 0; i < n; ++i) {
                const int c = i + 2;
                d[i] = s * (-e[c + 2] + 16.0 * e[c + 1] - 30.0 * e[c] + 16.0 * e[c - 1] - e[c - 2]);
            }
            break;
        }
        case 3: {
            const std::vector<double> e = extend_nodes(w, 3, bc, p);
            const double s = 1.0 / (8.0 * dx * dx * dx);
            for (int i = 0; i < n; ++i) {
                const int c = i + 3;
                d[i] = s * (-e[c + 3] + 8.0 * e[c + 2] - 13.0 * e[c + 1] + 13.0 * e[c - 1] -
                            8.0 * e[c - 2] + e[c - 3]);
            }
            break;
        }
        default:
            throw error("fd_derivative: order must be 1, 2 or 3");
    }
    return d;
}

} // namespace gnwave

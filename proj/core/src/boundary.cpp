#include "gnwave/boundary.hpp"

#include "gnwave/error.hpp"

namespace gnwave {

bool is_periodic(BcPair bc) {
    detail::require((bc.left == Bc::periodic) == (bc.right == Bc::periodic),
                    "boundary: periodic conditions must be two-sided");
    return bc.left == Bc::periodic;
}

namespace {

// Reflection sign for a one-sided image; periodic is handled separately.
double image_sign(Bc side, Parity p) {
    if (side == Bc::wall && p == Parity::odd) return -1.0;
    return 1.0; // wall/even and open
}

} // namespace

std::vector<double> extend_cells(const std::vector<double>& w, int k, BcPair bc, Parity p) {
    const int n = static_cast<int>(w.size());
    detail::require(k >= 0 && k <= n, "extend_cells: ghost width out of range");
    const bool per = is_periodic(bc);
    std::vector<double> ext(n + 2 * k);
    for (int j = 0; j < n; ++j) ext[k + j] = w[j];
    const double sl = image_sign(bc.left, p);
    const double sr = image_sign(bc.right, p);
    for (int m = 1; m <= k; ++m) {
        ext[k - m] = per ? w[n - m] : sl * w[m - 1];
        ext[k + n - 1 + m] = per ? w[m - 1] : sr * w[n - m];
    }
    return ext;
}

std::vector<double> extend_nodes(const std::vector<double>& w, int k, BcPair bc, Parity p) {
    const int n_node = static_cast<int>(w.size());
    const int N = n_node - 1;
    detail::require(N >= 1 && k >= 0 && k <= N, "extend_nodes: ghost width out of range");
    const bool per = is_periodic(bc);
    std::vector<double> ext(n_node + 2 * k);
    for (int i = 0; i < n_node; ++i) ext[k + i] = w[i];
    const double sl = image_sign(bc.left, p);
    const double sr = image_sign(bc.right, p);
    for (int m = 1; m <= k; ++m) {
        ext[k - m] = per ? w[N - m] : sl * w[m];
        ext[k + N + m] = per ? w[m] : sr * w[N - m];
    }
    return ext;
}

Folded fold_node_index(int j, int n_cells, BcPair bc, Parity p) {
    const int N = n_cells;
    if (is_periodic(bc)) {
        int idx = ((j % N) + N) % N;
        return {idx, 1.0};
    }
    double sign = 1.0;
    while (j < 0 || j > N) {
        if (j < 0) {
            j = -j;
            sign *= image_sign(bc.left, p);
        } else {
            j = 2 * N - j;
            sign *= image_sign(bc.right, p);
        }
    }
    return {j, sign};
}

} // namespace gnwave

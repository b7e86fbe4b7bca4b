#include "gnwave/conversions.hpp"

#include "gnwave/error.hpp"

namespace gnwave {
namespace {

// Thomas algorithm; `a` sub-, `b` main, `c` super-diagonal. Overwrites nothing.
std::vector<double> solve_tridiag(std::vector<double> a, std::vector<double> b,
                                  std::vector<double> c, std::vector<double> r) {
    const std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        r[i] -= m * r[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = r[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (r[i] - c[i] * x[i + 1]) / b[i];
    return x;
}

// Cyclic tridiagonal solve (constant stencil sub=a, diag=b, super=c with the
// two wrap-around corners) via the Sherman-Morrison rank-one update.
std::vector<double> solve_cyclic_tridiag(double a, double b, double c, const std::vector<double>& r) {
    const std::size_t n = r.size();
    std::vector<double> sub(n, a), dia(n, b), sup(n, c);
    const double gamma = -b;
    dia[0] = b - gamma;
    dia[n - 1] = b - a * c / gamma;
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = a;
    std::vector<double> x = solve_tridiag(sub, dia, sup, r);
    std::vector<double> z = solve_tridiag(sub, dia, sup, u);
    const double vx = x[0] + (c / gamma) * x[n - 1];
    const double vz = z[0] + (c / gamma) * z[n - 1];
    const double fac = vx / (1.0 + vz);
    for (std::size_t i = 0; i < n; ++i) x[i] -= fac * z[i];
    return x;
}

} // namespace

std::vector<double> cell_to_node(const std::vector<double>& cell, BcPair bc, Parity p) {
    const int n = static_cast<int>(cell.size());
    detail::require(n >= 3, "cell_to_node: too few cells");
    const std::vector<double> ext = extend_cells(cell, 1, bc, p);

    if (is_periodic(bc)) {
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = 0.5 * (ext[i] + ext[i + 1]);
        std::vector<double> w = solve_cyclic_tridiag(1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0, rhs);
        w.push_back(w[0]);
        return w;
    }

    const int nn = n + 1;
    std::vector<double> sub(nn, 1.0 / 6.0), dia(nn, 2.0 / 3.0), sup(nn, 1.0 / 6.0), rhs(nn);
    for (int i = 0; i < nn; ++i) rhs[i] = 0.5 * (ext[i] + ext[i + 1]);
    // Fold the stencil coefficients that fall outside [0, N] back onto their
    // mirror node, with the parity sign.
    const Folded fl = fold_node_index(-1, n, bc, p);
    const Folded fr = fold_node_index(n + 1, n, bc, p);
    detail::require(fl.index == 1 && fr.index == n - 1, "cell_to_node: unexpected fold");
    sup[0] = 1.0 / 6.0 + fl.sign / 6.0;
    sub[nn - 1] = 1.0 / 6.0 + fr.sign / 6.0;
    return solve_tridiag(sub, dia, sup, rhs);
}

std::vector<double> node_to_cell(const std::vector<double>& node, BcPair bc, Parity p) {
    const int n_node = static_cast<int>(node.size());
    detail::require(n_node >= 4, "node_to_cell: too few nodes");
    const int n = n_node - 1;
    const std::vector<double> ext = extend_nodes(node, 1, bc, p);
    std::vector<double> cell(n);
    for (int j = 0; j < n; ++j)
        cell[j] = (-ext[j] + 13.0 * ext[j + 1] + 13.0 * ext[j + 2] - ext[j + 3]) / 24.0;
    return cell;
}

} // namespace gnwave

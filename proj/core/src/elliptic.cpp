#include "gnwave/elliptic.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <utility>

#include "gnwave/error.hpp"
#include "gnwave/fd_stencils.hpp"

namespace gnwave {

struct EllipticFactorization::Impl {
    int n_cells = 0;
    int n_unknowns = 0;
    bool periodic = false;
    std::vector<double> h_fingerprint;
    std::vector<char> dry_node;
    Eigen::SparseMatrix<double> A;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
};

int EllipticFactorization::n_nodes() const {
    detail::require(valid(), "elliptic: empty factorization");
    return impl_->n_cells + 1;
}

const std::vector<char>& EllipticFactorization::dry() const {
    detail::require(valid(), "elliptic: empty factorization");
    return impl_->dry_node;
}

bool EllipticFactorization::matches(const std::vector<double>& h_node) const {
    return valid() && h_node == impl_->h_fingerprint;
}

std::vector<double> EllipticFactorization::solve_scaled(std::vector<double> scaled) const {
    detail::require(valid(), "elliptic: solve on empty factorization");
    const Impl& im = *impl_;
    const int nn = im.n_cells + 1;
    detail::require(static_cast<int>(scaled.size()) == nn, "elliptic: rhs size mismatch");

    for (int i = 0; i < nn; ++i)
        if (im.dry_node[i]) scaled[i] = 0.0;

    Eigen::VectorXd b(im.n_unknowns);
    for (int i = 0; i < im.n_unknowns; ++i) b[i] = scaled[i];

    Eigen::VectorXd w = im.lu.solve(b);
    if (im.lu.info() != Eigen::Success)
        throw numerical_error("elliptic: sparse LU solve failed");

    const double res = (im.A * w - b).lpNorm<Eigen::Infinity>();
    const double scale = std::max(1e-300, b.lpNorm<Eigen::Infinity>());
    if (!(res <= 1e-10 * scale) && res > 1e-14)
        throw numerical_error("elliptic: solve residual " + std::to_string(res) +
                              " exceeds tolerance for rhs scale " + std::to_string(scale));

    std::vector<double> out(nn);
    for (int i = 0; i < im.n_unknowns; ++i) out[i] = w[i];
    if (im.periodic) out[im.n_cells] = w[0];
    return out;
}

std::vector<double> EllipticFactorization::solve(std::vector<double> rhs) const {
    detail::require(valid(), "elliptic: solve on empty factorization");
    const Impl& im = *impl_;
    const int nn = im.n_cells + 1;
    detail::require(static_cast<int>(rhs.size()) == nn, "elliptic: rhs size mismatch");

    for (int i = 0; i < nn; ++i)
        rhs[i] = im.dry_node[i] ? 0.0 : rhs[i] / im.h_fingerprint[i];
    std::vector<double> w = solve_scaled(std::move(rhs));
    for (int i = 0; i < nn; ++i) w[i] *= im.dry_node[i] ? 0.0 : im.h_fingerprint[i];
    return w;
}

EllipticFactorization assemble_elliptic(const std::vector<double>& h_node,
                                        const Bathymetry& bathy, double alpha, BcPair bc,
                                        double eps_dry, const std::vector<char>& force_dry) {
    const int nn = static_cast<int>(h_node.size());
    detail::require(nn >= 8, "elliptic: nodal field too short");
    detail::require(static_cast<int>(bathy.node.size()) == nn,
                    "elliptic: bathymetry does not match the nodal grid");
    detail::require(force_dry.empty() || static_cast<int>(force_dry.size()) == nn,
                    "elliptic: force_dry size mismatch");
    detail::require(alpha >= 1.0, "elliptic: alpha must be >= 1");
    const int n_cells = nn - 1;
    const bool periodic = is_periodic(bc);
    const double dx = bathy.dx;

    auto im = std::make_shared<EllipticFactorization::Impl>();
    im->n_cells = n_cells;
    im->periodic = periodic;
    im->n_unknowns = periodic ? n_cells : nn;
    im->h_fingerprint = h_node;
    im->dry_node.assign(nn, 0);
    for (int i = 0; i < nn; ++i)
        im->dry_node[i] = (h_node[i] <= eps_dry || (!force_dry.empty() && force_dry[i])) ? 1 : 0;
    if (periodic) {
        const char d = im->dry_node[0] || im->dry_node[n_cells];
        im->dry_node[0] = im->dry_node[n_cells] = d;
    }

    const std::vector<double> hx = fd_derivative(h_node, 1, dx, bc, Parity::even);

    // Stencil weights for w_{i+m}, m = -2..2; the operand is q-like so
    // out-of-range columns fold with odd parity.
    static constexpr double c1[5] = {1.0, -8.0, 0.0, 8.0, -1.0};   // /(12 dx)
    static constexpr double c2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0}; // /(12 dx^2)

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(im->n_unknowns) * 6);
    for (int i = 0; i < im->n_unknowns; ++i) {
        trips.emplace_back(i, i, 1.0);
        if (im->dry_node[i]) continue;
        const double hi = h_node[i];
        const double d2w = -(hi * hi / 3.0) / (12.0 * dx * dx);
        const double d1w = -(hi * hx[i]) / (12.0 * dx);
        const double zx = hx[i] + bathy.dbdx[i];
        const double p0 = zx * bathy.dbdx[i] + 0.5 * hi * bathy.d2bdx2[i];
        for (int m = -2; m <= 2; ++m) {
            double coef = d2w * c2[m + 2] + d1w * c1[m + 2];
            if (m == 0) coef += p0;
            const Folded f = fold_node_index(i + m, n_cells, bc, Parity::odd);
            if (im->dry_node[f.index]) continue; // dry unknowns are removed
            trips.emplace_back(i, f.index, alpha * coef * f.sign);
        }
    }

    im->A.resize(im->n_unknowns, im->n_unknowns);
    im->A.setFromTriplets(trips.begin(), trips.end());
    im->A.makeCompressed();
    im->lu.compute(im->A);
    if (im->lu.info() != Eigen::Success)
        throw numerical_error("elliptic: sparse LU factorization failed");

    EllipticFactorization fact;
    fact.impl_ = std::move(im);
    return fact;
}

} // namespace gnwave

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gnwave/error.hpp"
#include "gnwave/fd_stencils.hpp"

using namespace gnwave;

namespace {

// Nodal samples of x^p on [0, L]; only interior nodes (3 in from each end)
// are compared so the ghost closure never enters.
std::vector<double> power_nodes(int n_nodes, double dx, int p) {
    std::vector<double> w(n_nodes);
    for (int i = 0; i < n_nodes; ++i) w[i] = std::pow(i * dx, p);
    return w;
}

double dpow(double x, int p, int order) {
    double c = 1.0;
    for (int m = 0; m < order; ++m) c *= (p - m);
    return p - order >= 0 ? c * std::pow(x, p - order) : 0.0;
}

} // namespace

TEST_CASE("interior stencils are exact on polynomials up to their degree") {
    const int n_nodes = 17;
    const double dx = 0.37;
    const BcPair bc{Bc::open, Bc::open};

    // order -> highest exactly differentiated degree (five-point first and
    // second derivatives, seven-point third derivative)
    struct Row {
        int order;
        int degree;
    };
    for (Row r : {Row{1, 4}, Row{2, 5}, Row{3, 4}}) {
        for (int p = 0; p <= r.degree; ++p) {
            const auto w = power_nodes(n_nodes, dx, p);
            const auto d = fd_derivative(w, r.order, dx, bc, Parity::even);
            for (int i = 3; i <= n_nodes - 4; ++i) {
                const double exact = dpow(i * dx, p, r.order);
                CHECK(d[i] == doctest::Approx(exact).epsilon(1e-9).scale(std::pow(10.0, p)));
            }
        }
    }
}

TEST_CASE("stencils are fourth order on a periodic sine") {
    const double L = 2.0 * std::numbers::pi;
    const BcPair bc{Bc::periodic, Bc::periodic};

    for (int order : {1, 2, 3}) {
        double err[2];
        for (int lev = 0; lev < 2; ++lev) {
            const int n = 32 << lev;
            const double dx = L / n;
            std::vector<double> w(n + 1);
            for (int i = 0; i <= n; ++i) w[i] = std::sin(i * dx);
            const auto d = fd_derivative(w, order, dx, bc, Parity::even);
            double e = 0.0;
            for (int i = 0; i <= n; ++i) {
                const double x = i * dx;
                const double exact = order == 1 ? std::cos(x)
                                   : order == 2 ? -std::sin(x)
                                                : -std::cos(x);
                e = std::max(e, std::abs(d[i] - exact));
            }
            err[lev] = e;
        }
        const double ratio = err[0] / err[1];
        CHECK(ratio > 13.0);
        CHECK(ratio < 19.0);
    }
}

TEST_CASE("wall closures preserve parity") {
    // An odd function about both walls of [0, pi]: sin(2x). Its first
    // derivative is even, so the stencil with odd images must reproduce it
    // at the walls as accurately as in the interior.
    const int n = 48;
    const double dx = std::numbers::pi / n;
    const BcPair bc{Bc::wall, Bc::wall};
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = std::sin(2.0 * i * dx);

    const auto d = fd_derivative(w, 1, dx, bc, Parity::odd);
    double e = 0.0;
    for (int i = 0; i <= n; ++i) e = std::max(e, std::abs(d[i] - 2.0 * std::cos(2.0 * i * dx)));
    CHECK(e < 5e-5); // interior-grade accuracy, no boundary blow-up

    // Even parity about the walls: cos(2x); derivative odd, zero at walls.
    for (int i = 0; i <= n; ++i) w[i] = std::cos(2.0 * i * dx);
    const auto de = fd_derivative(w, 1, dx, bc, Parity::even);
    CHECK(std::abs(de[0]) < 1e-12);
    CHECK(std::abs(de[n]) < 1e-12);
}

TEST_CASE("fd_derivative rejects bad input") {
    std::vector<double> w(9, 1.0);
    CHECK_THROWS_AS(fd_derivative(w, 4, 0.1, {Bc::open, Bc::open}, Parity::even), error);
    CHECK_THROWS_AS(fd_derivative(w, 1, 0.0, {Bc::open, Bc::open}, Parity::even), error);
}

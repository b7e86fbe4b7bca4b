#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gnwave/reconstruction.hpp"

using namespace gnwave;

TEST_CASE("limiter flattens extrema") {
    CHECK(limiter(1.0, -0.5, 0.8) == 0.0);
    CHECK(limiter(-1.0, 0.5, 0.8) == 0.0);
    CHECK(limiter(0.0, 1.0, 0.8) == 0.0);
}

TEST_CASE("limiter is transparent on gentle monotone data") {
    // |w| below both TVD bounds passes through with the sign of u —
    // increasing and decreasing profiles must behave symmetrically.
    CHECK(limiter(1.0, 1.2, 1.1) == doctest::Approx(1.1));
    CHECK(limiter(-1.0, -1.2, -1.1) == doctest::Approx(-1.1));
    // The sign of the high-order argument itself is immaterial.
    CHECK(limiter(-1.0, -1.2, 1.1) == doctest::Approx(-1.1));
}

TEST_CASE("limiter clamps steep jumps to twice the smaller difference") {
    CHECK(limiter(0.1, 5.0, 3.0) == doctest::Approx(0.2));
    CHECK(limiter(5.0, 0.1, 3.0) == doctest::Approx(0.2));
    CHECK(limiter(-0.1, -5.0, -3.0) == doctest::Approx(-0.2));
}

TEST_CASE("limited edges reproduce linear data exactly in the interior") {
    const int n = 20;
    const double slope = 0.7, dx = 1.0;
    std::vector<double> cell(n);
    for (int j = 0; j < n; ++j) cell[j] = 2.0 + slope * (j + 0.5) * dx;

    const auto e = limited_edges(cell, {Bc::open, Bc::open}, Parity::even);
    REQUIRE(e.left.size() == cell.size());
    for (int j = 3; j < n - 3; ++j) {
        CHECK(e.left[j] == doctest::Approx(2.0 + slope * j * dx).epsilon(1e-13));
        CHECK(e.right[j] == doctest::Approx(2.0 + slope * (j + 1) * dx).epsilon(1e-13));
    }
}

TEST_CASE("decreasing linear data reconstructs as cleanly as increasing") {
    // Regression: a sign slip in the limiter's third argument inverts the
    // slope on decreasing profiles, which shows up as first-order errors.
    const int n = 20;
    std::vector<double> up(n), down(n);
    for (int j = 0; j < n; ++j) {
        up[j] = 0.3 * j;
        down[j] = -0.3 * j;
    }
    const auto eu = limited_edges(up, {Bc::open, Bc::open}, Parity::even);
    const auto ed = limited_edges(down, {Bc::open, Bc::open}, Parity::even);
    for (int j = 3; j < n - 3; ++j) {
        CHECK(ed.right[j] == doctest::Approx(-eu.right[j]).epsilon(1e-13));
        CHECK(ed.left[j] == doctest::Approx(-eu.left[j]).epsilon(1e-13));
    }
}

TEST_CASE("edges at a local extremum collapse to the cell average") {
    std::vector<double> cell{0.0, 1.0, 2.0, 5.0, 2.0, 1.0, 0.5, 0.2};
    const auto e = limited_edges(cell, {Bc::open, Bc::open}, Parity::even);
    CHECK(e.left[3] == 5.0);
    CHECK(e.right[3] == 5.0);
}

TEST_CASE("edge excursions obey the local TVD bound") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> step(0.0, 1.0);
    const int n = 40;

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> cell(n);
        cell[0] = 0.0;
        for (int j = 1; j < n; ++j) cell[j] = cell[j - 1] + step(rng);

        const auto e = limited_edges(cell, {Bc::open, Bc::open}, Parity::even);
        for (int j = 1; j < n - 1; ++j) {
            const double dm = std::abs(cell[j] - cell[j - 1]);
            const double dp = std::abs(cell[j + 1] - cell[j]);
            const double bound = std::min(dm, dp) + 1e-14;
            CHECK(std::abs(e.right[j] - cell[j]) <= bound);
            CHECK(std::abs(e.left[j] - cell[j]) <= bound);
        }
    }
}

TEST_CASE("smooth-profile edges are high-order accurate") {
    // On a resolved smooth monotone profile the limiter must not clip:
    // reconstruct tanh and compare with point values at the edges.
    const int n = 64;
    const double dx = 8.0 / n;
    std::vector<double> cell(n);
    for (int j = 0; j < n; ++j) {
        const double a = -4.0 + j * dx, b = a + dx;
        // exact average of tanh: log(cosh)/dx difference
        cell[j] = (std::log(std::cosh(b)) - std::log(std::cosh(a))) / dx;
    }
    const auto e = limited_edges(cell, {Bc::open, Bc::open}, Parity::even);
    double emax = 0.0;
    for (int j = 4; j < n - 4; ++j) {
        emax = std::max(emax, std::abs(e.left[j] - std::tanh(-4.0 + j * dx)));
        emax = std::max(emax, std::abs(e.right[j] - std::tanh(-4.0 + (j + 1) * dx)));
    }
    CHECK(emax < 5e-5); // far below the O(dx^2) ~ 1.6e-2 a clipped scheme gives
}

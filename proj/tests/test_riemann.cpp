#include <doctest.h>

#include <cmath>
#include <random>

#include "gnwave/error.hpp"
#include "gnwave/riemann.hpp"

using namespace gnwave;

namespace {
constexpr double kG = 9.81;
constexpr double kEps = 1e-6;
} // namespace

TEST_CASE("physical flux with dry guard") {
    const Flux f = physical_flux(2.0, 3.0, kG, kEps);
    CHECK(f.mass == 3.0);
    CHECK(f.momentum == doctest::Approx(3.0 * 1.5 + 0.5 * kG * 4.0).epsilon(1e-14));
    const Flux dry = physical_flux(0.0, 0.0, kG, kEps);
    CHECK(dry.mass == 0.0);
    CHECK(dry.momentum == 0.0);
}

TEST_CASE("numerical flux is consistent") {
    for (double h : {0.05, 0.7, 3.0}) {
        for (double u : {-2.0, 0.0, 1.3}) {
            const Flux f = numerical_flux(h, h * u, h, h * u, kG, kEps);
            const Flux p = physical_flux(h, h * u, kG, kEps);
            CHECK(f.mass == doctest::Approx(p.mass).epsilon(1e-12));
            CHECK(f.momentum == doctest::Approx(p.momentum).epsilon(1e-12));
        }
    }
}

TEST_CASE("double dry interface carries nothing") {
    const Flux f = numerical_flux(0.0, 0.0, 1e-7, 0.0, kG, kEps);
    CHECK(f.mass == 0.0);
    CHECK(f.momentum == 0.0);
}

TEST_CASE("dry-bed dam break pushes mass toward the dry side") {
    SUBCASE("dry right") {
        const Flux f = numerical_flux(1.0, 0.0, 0.0, 0.0, kG, kEps);
        CHECK(f.mass > 0.0);
        CHECK(f.momentum > 0.0);
    }
    SUBCASE("dry left") {
        const Flux f = numerical_flux(0.0, 0.0, 1.0, 0.0, kG, kEps);
        CHECK(f.mass < 0.0);
        CHECK(f.momentum > 0.0); // pressure still pushes momentum flux positive
    }
}

TEST_CASE("mirror symmetry") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> hd(0.0, 2.0), ud(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        double hL = hd(rng), hR = hd(rng);
        if (k % 7 == 0) hL = 0.0; // mix dry states in
        const double uL = ud(rng), uR = ud(rng);
        const Flux f = numerical_flux(hL, hL * uL, hR, hR * uR, kG, kEps);
        const Flux m = numerical_flux(hR, -hR * uR, hL, -hL * uL, kG, kEps);
        CHECK(f.mass == doctest::Approx(-m.mass).epsilon(1e-11).scale(1.0));
        CHECK(f.momentum == doctest::Approx(m.momentum).epsilon(1e-11).scale(1.0));
    }
}

TEST_CASE("random states never produce NaN") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> hd(0.0, 5.0), ud(-10.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const double hL = k % 11 == 0 ? 0.0 : hd(rng);
        const double hR = k % 13 == 0 ? 0.0 : hd(rng);
        const Flux f = numerical_flux(hL, hL * ud(rng), hR, hR * ud(rng), kG, kEps);
        CHECK(std::isfinite(f.mass));
        CHECK(std::isfinite(f.momentum));
    }
}

TEST_CASE("invalid states are rejected") {
    CHECK_THROWS_AS(numerical_flux(-0.1, 0.0, 1.0, 0.0, kG, kEps), error);
    CHECK_THROWS_AS(numerical_flux(1.0, std::nan(""), 1.0, 0.0, kG, kEps), error);
}

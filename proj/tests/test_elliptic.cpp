#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heine/elliptic.hpp"
#include "heine/oracle.hpp"
#include "support.hpp"

using heine::Complex;
using heine::test::rel_err;

constexpr double pi = std::numbers::pi;

TEST_CASE("values at k = 0") {
    CHECK(heine::elliptic_k(0.0) == doctest::Approx(pi / 2).epsilon(1e-16));
    CHECK(heine::elliptic_e(0.0) == doctest::Approx(pi / 2).epsilon(1e-16));
}

TEST_CASE("modulus range") {
    CHECK_THROWS_AS(heine::elliptic_k(1.0), heine::ModulusRange);
    CHECK_THROWS_AS(heine::elliptic_e(1.0), heine::ModulusRange);
    CHECK_THROWS_AS(heine::elliptic_k(-0.1), heine::ModulusRange);
    CHECK_THROWS_AS(heine::elliptic_ke(0.5, 0.0), heine::ModulusRange);
}

TEST_CASE("z = 2 modulus against quadrature") {
    const double k = std::sqrt(2.0 / 3.0);
    const auto kq = heine::oracle::integrate(
        [k](double t) { return Complex(1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t))); }, 0.0, pi / 2,
        1e-15);
    const auto eq = heine::oracle::integrate(
        [k](double t) { return Complex(std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t))); }, 0.0, pi / 2, 1e-15);
    CHECK(rel_err(heine::elliptic_k(k), kq.value) < 1e-14);
    CHECK(rel_err(heine::elliptic_e(k), eq.value) < 1e-14);
}

TEST_CASE("reference values") {
    // K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt(pi))
    CHECK(rel_err(heine::elliptic_k(std::sqrt(0.5)), std::pow(std::tgamma(0.25), 2) / (4.0 * std::sqrt(pi))) <
          1e-15);
    // mpmath ellipk/ellipe with m = k^2
    CHECK(rel_err(heine::elliptic_k(0.5), 1.6857503548125960429) < 1e-15);
    CHECK(rel_err(heine::elliptic_e(0.5), 1.4674622093394271555) < 1e-15);
    CHECK(rel_err(heine::elliptic_k(0.999), 4.4955963958421441704) < 1e-14);
    CHECK(rel_err(heine::elliptic_e(0.999), 1.0039944099655078177) < 1e-14);
}

TEST_CASE("complement supplied by the caller near k = 1") {
    // z = 1.1: k = sqrt(2/(z+1)), k' = sqrt((z-1)/(z+1))
    const double z = 1.1;
    const auto p = heine::elliptic_ke(std::sqrt(2.0 / (z + 1.0)), std::sqrt((z - 1.0) / (z + 1.0)));
    CHECK(rel_err(p.k, 2.931850249333662088) < 2e-15);
    CHECK(rel_err(p.e, 1.0581449672500525129) < 2e-15);
}

TEST_CASE("Legendre relation") {
    for (double k : {0.1, 0.5, 0.8, 0.95}) {
        const double kp = std::sqrt(1.0 - k * k);
        const auto a = heine::elliptic_ke(k, kp);
        const auto b = heine::elliptic_ke(kp, k);
        CHECK(std::abs(a.e * b.k + b.e * a.k - a.k * b.k - pi / 2) < 1e-14);
    }
}

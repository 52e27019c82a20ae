#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heine/scalar.hpp"
#include "support.hpp"

using heine::Complex;
using heine::test::rel_err;

TEST_CASE("gamma at classical points") {
    CHECK(heine::gamma(1.0) == Complex(1.0));
    CHECK(rel_err(heine::gamma(5.0), 24.0) < 1e-15);
    CHECK(rel_err(heine::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-15);
    double f = 1.0;
    for (int n = 1; n < 30; ++n)
        f *= n;
    CHECK(rel_err(heine::gamma(30.0), f) < 1e-13);
}

TEST_CASE("gamma at complex points") {
    // mpmath, 30 digits
    CHECK(rel_err(heine::gamma(Complex(0.0, 1.0)), Complex(-0.154949828301810685125, -0.498015668118356042714)) <
          1e-14);
    CHECK(rel_err(heine::gamma(Complex(0.3, 2.7)), Complex(0.0280598796102732159692, -0.00943307183645711357763)) <
          1e-13);
    CHECK(rel_err(heine::gamma(Complex(-3.7, 0.2)), Complex(0.193759721611561678198, -0.0188366627334681595731)) <
          1e-13);
}

TEST_CASE("gamma poles") {
    for (double p : {0.0, -1.0, -2.0, -17.0})
        CHECK_THROWS_AS(heine::gamma(p), heine::PoleError);
    CHECK(heine::rgamma(-3.0) == Complex(0.0));
    CHECK(rel_err(heine::rgamma(4.0), 1.0 / 6.0) < 1e-15);
}

TEST_CASE("gamma ratio for large arguments") {
    const double ref = std::exp(std::lgamma(150.5) - std::lgamma(150.0));
    CHECK(rel_err(heine::gamma_ratio(150.5, 150.0), ref) < 1e-12);
    CHECK(rel_err(heine::gamma_ratio(30.5, 27.5), 29.5 * 28.5 * 27.5) < 1e-14);
    CHECK(heine::gamma_ratio(2.5, -1.0) == Complex(0.0));
    CHECK_THROWS_AS(heine::gamma_ratio(-2.0, 0.5), heine::PoleError);
}

TEST_CASE("rising factorial") {
    CHECK(heine::pochhammer_rising(Complex(0.3, 0.7), 0) == Complex(1.0));
    CHECK(heine::pochhammer_rising(3.0, 4) == Complex(360.0));
    CHECK(heine::pochhammer_rising(-2.0, 4) == Complex(0.0));
    CHECK(heine::pochhammer_rising(-2.0, 2) == Complex(2.0));
}

TEST_CASE("falling factorial and its reflection") {
    CHECK(heine::pochhammer_falling(Complex(2.0, 1.0), 0) == Complex(1.0));
    CHECK(heine::pochhammer_falling(5.0, 2) == Complex(20.0));
    CHECK(heine::pochhammer_falling(-3.0, 2) == Complex(12.0));
    CHECK(heine::pochhammer_falling(-3.0, 2) == heine::pochhammer_rising(3.0, 2));
    const Complex z(1.7, -0.4);
    for (unsigned n = 0; n <= 12; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(rel_err(sign * heine::pochhammer_falling(-z, n), heine::pochhammer_rising(z, n)) < 1e-14);
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(heine::binomial(9.0, 0) == Complex(1.0));
    CHECK(heine::binomial(7.0, 3) == Complex(35.0));
    CHECK(heine::binomial(7.0, 3) == heine::binomial(7.0, 4));
    CHECK(heine::binomial(0.5, 2) == Complex(-0.125));
    CHECK(heine::binomial(3.0, 5) == Complex(0.0));
    CHECK(heine::binomial_exact(62, 31) == 465428353255261088ULL);
    CHECK(heine::binomial_exact(20, 10) == 184756ULL);
    CHECK(heine::binomial_exact(5, 6) == 0ULL);
}

TEST_CASE("double factorial") {
    CHECK(heine::double_factorial(5) == 15.0);
    CHECK(heine::double_factorial(-1) == 1.0);
    CHECK(heine::double_factorial(-3) == -1.0);
    CHECK(heine::double_factorial(-5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(heine::double_factorial(0) == 1.0);
    CHECK(heine::double_factorial(6) == 48.0);
    CHECK_THROWS_AS(heine::double_factorial(-2), heine::EvenNegativeError);
    // Gamma continuation m!! = 2^{(m+1)/2} Gamma(m/2+1)/sqrt(pi)
    for (int m = -15; m <= 15; m += 2) {
        const double ref =
            std::pow(2.0, (m + 1) / 2.0) * heine::gamma(m / 2.0 + 1.0).real() / std::sqrt(std::numbers::pi);
        CHECK(rel_err(heine::double_factorial(m), ref) < 1e-14);
    }
}

TEST_CASE("Neumann factor") {
    CHECK(heine::neumann_factor(0) == 1);
    CHECK(heine::neumann_factor(1) == 2);
    CHECK(heine::neumann_factor(9) == 2);
    CHECK_THROWS_AS(heine::neumann_factor(-1), heine::NegativeModeError);
}

TEST_CASE("exp(i pi t) is exact on half integers") {
    CHECK(heine::exp_i_pi(0.5) == Complex(0.0, 1.0));
    CHECK(heine::exp_i_pi(1.0) == Complex(-1.0, 0.0));
    CHECK(heine::exp_i_pi(-1.5) == Complex(0.0, 1.0));
    CHECK(heine::exp_i_pi(4.0) == Complex(1.0, 0.0));
    CHECK(rel_err(heine::exp_i_pi(Complex(0.3, 0.2)), std::exp(Complex(0.0, std::numbers::pi) * Complex(0.3, 0.2))) <
          1e-15);
}

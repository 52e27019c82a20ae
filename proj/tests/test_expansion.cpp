#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heine/expansion.hpp"
#include "heine/legendre_q.hpp"
#include "heine/oracle.hpp"
#include "support.hpp"

using heine::Complex;
using heine::CoefficientRoute;
using heine::CutArgument;
using heine::HeineParameters;
using heine::test::rel_err;

namespace {

constexpr double pi = std::numbers::pi;

CutArgument Z(Complex z) { return CutArgument::validate(z); }

double max_rel_reconstruction(const heine::TruncatedExpansion& ex, Complex mu, const CutArgument& z) {
    double worst = 0.0;
    for (double psi : heine::psi_grid()) {
        const Complex d = heine::direct_value(mu, z, psi);
        worst = std::max(worst, std::abs(ex.evaluate(psi) - d) / std::abs(d));
    }
    return worst;
}

} // namespace

TEST_CASE("mu = 1 coefficients are geometric") {
    const auto z = Z(1.25); // cosh(log 2)
    CHECK(rel_err(heine::coefficient(1.0, 1, z).value, 2.0 / 3.0) < 1e-15);
    for (int n = 0; n <= 12; ++n)
        CHECK(rel_err(heine::coefficient(1.0, n, z).value, 4.0 / 3.0 * std::pow(2.0, -n)) < 1e-14);
}

TEST_CASE("leading term as z grows") {
    const Complex mu(0.6, 0.3);
    const Complex z = 1e6;
    CHECK(std::abs(heine::coefficient(mu, 0, Z(z)).value * std::pow(z, mu) - 1.0) < 1e-11);
}

TEST_CASE("coefficient against the Fourier integral") {
    const Complex mu(0.6, 0.3);
    const auto z = Z(Complex(1.5, 0.8));
    const auto q = heine::oracle::fourier_integral_quadrature(mu, 3, z, 1e-15);
    for (auto route : {CoefficientRoute::automatic, CoefficientRoute::hypergeometric, CoefficientRoute::legendre})
        CHECK(rel_err(heine::coefficient(mu, 3, z, route).value, q.value) < 1e-10);
}

TEST_CASE("Heine mu = 1/2") {
    HeineParameters p{0.5, Z(2.0)};
    p.tol = 1e-10;
    const auto ex = heine::expand(p);
    CHECK(rel_err(ex.evaluate(0.3), 1.0 / std::sqrt(2.0 - std::cos(0.3))) < 1e-10);
    CHECK(ex.table.convention == heine::coefficient_convention);
    // sqrt(2)/pi Q_{n-1/2}(z), the original identity's coefficients.
    for (int n = 0; n <= 10; ++n) {
        const auto dq = heine::DegreeOrder::make(n - 0.5, 0.0);
        const auto a = heine::coefficient(0.5, n, Z(2.0));
        CHECK(rel_err(a.value, std::sqrt(2.0) / pi * heine::q_dispatch(dq, Z(2.0)).value) < 4e-16);
        // Across backends, agreement is limited by the recurrence's error estimate.
        const auto h = heine::q_via_hypergeometric(dq, Z(2.0));
        CHECK(std::abs(a.value - std::sqrt(2.0) / pi * h.value) <= std::max(1e-14 * std::abs(a.value), a.err_est));
    }
}

TEST_CASE("mu = 0 is the constant 1") {
    HeineParameters p{0.0, Z(Complex(1.5, 0.8))};
    p.auto_n_max = false;
    p.n_max = 6;
    const auto ex = heine::expand(p);
    CHECK(ex.table.entries[0].value == Complex(1.0));
    for (std::size_t n = 1; n < ex.table.entries.size(); ++n)
        CHECK(ex.table.entries[n].value == Complex(0.0));
    CHECK(ex.evaluate(1.234) == Complex(1.0));
}

TEST_CASE("auto truncation reaches the tolerance") {
    for (Complex mu : {Complex(0.5), Complex(2.0), Complex(0.6, 0.3), Complex(-0.5), Complex(-1.5)})
        for (Complex zv : {Complex(1.25), Complex(5.0), Complex(-2.0, 0.5)}) {
            const auto z = Z(zv);
            const auto ex = heine::expand({mu, z});
            CHECK(max_rel_reconstruction(ex, mu, z) < 1e-10);
            CHECK(ex.tail_bound >= 0.0);
            CHECK(ex.error_bound >= ex.tail_bound);
        }
}

TEST_CASE("fixed order and cap") {
    HeineParameters p{0.5, Z(1.25)};
    p.auto_n_max = false;
    p.n_max = 5;
    CHECK(heine::expand(p).n_max() == 5);
    p.auto_n_max = true;
    p.n_cap = 16;
    p.tol = 1e-15;
    CHECK_THROWS_AS(heine::expand(p), heine::NoConvergence);
    p.tol = -1.0;
    CHECK_THROWS_AS(heine::expand(p), heine::DomainError);
}

TEST_CASE("threaded table is identical to the serial one") {
    const Complex mu(0.6, 0.3);
    const auto z = Z(Complex(1.5, 0.8));
    const auto a = heine::coefficient_table(mu, z, 40, CoefficientRoute::automatic, 1);
    const auto b = heine::coefficient_table(mu, z, 40, CoefficientRoute::automatic, 4);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t n = 0; n < a.entries.size(); ++n) {
        CHECK(a.entries[n].value == b.entries[n].value);
        CHECK(a.entries[n].backend == b.entries[n].backend);
    }
}

TEST_CASE("positive integer powers") {
    const auto z = Z(2.0);
    const auto l0 = heine::positive_power_expand(0, z);
    REQUIRE(l0.table.entries.size() == 1);
    CHECK(std::abs(l0.table.entries[0].value - 1.0) < 1e-15);

    const auto l1 = heine::positive_power_expand(1, z);
    REQUIRE(l1.table.entries.size() == 2);
    CHECK(rel_err(l1.table.entries[0].value, 2.0) < 1e-15);
    CHECK(rel_err(l1.table.entries[1].value, -0.5) < 1e-15);

    const auto l2 = heine::positive_power_expand(2, z);
    CHECK(rel_err(l2.evaluate(1.0), std::pow(2.0 - std::cos(1.0), 2)) < 1e-14);
    CHECK(l2.tail_bound == 0.0);

    // The general table also truncates exactly.
    const auto t = heine::coefficient_table(-3.0, Z(Complex(1.5, 0.8)), 8);
    for (int n = 4; n <= 8; ++n)
        CHECK(t.entries[static_cast<std::size_t>(n)].value == Complex(0.0));
    CHECK_THROWS_AS(heine::positive_power_expand(-1, z), heine::DomainError);
}

TEST_CASE("positive half-integer powers") {
    for (Complex zv : {Complex(2.0), Complex(1.5, 0.8)}) {
        const auto z = Z(zv);
        for (double mu : {-0.5, -1.5}) {
            const auto ex = heine::expand({mu, z});
            CHECK(max_rel_reconstruction(ex, mu, z) < 1e-10);
        }
    }
}

TEST_CASE("odd-half-integer coefficient formula") {
    for (int q = -2; q <= 3; ++q)
        for (int n = 0; n <= 5; ++n)
            CHECK(rel_err(heine::odd_half_integer_coefficient(q, n, Z(2.0)).value,
                          heine::coefficient(q + 0.5, n, Z(2.0), CoefficientRoute::hypergeometric).value) < 1e-12);
}

TEST_CASE("cosh closed forms") {
    CHECK(heine::cosh_closed_form(1, std::log(2.0), 0.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(heine::cosh_closed_form(2, 1.0, pi / 2) == doctest::Approx(1.0 / std::pow(std::cosh(1.0), 2)).epsilon(1e-14));
    for (int q : {3, 4}) {
        const double eta = 0.8;
        const auto ex = heine::expand({static_cast<double>(q), Z(std::cosh(eta))});
        CHECK(rel_err(heine::cosh_closed_form(q, eta, 0.3), ex.evaluate(0.3)) < 1e-10);
        CHECK(rel_err(heine::cosh_closed_form(q, eta, 0.3), std::pow(std::cosh(eta) - std::cos(0.3), -q)) < 1e-12);
    }
    CHECK_THROWS_AS(heine::cosh_closed_form(2, 0.0, 0.3), heine::DomainError);
    CHECK_THROWS_AS(heine::cosh_closed_form(5, 1.0, 0.3), heine::DomainError);
}

TEST_CASE("integer power coefficients at z = cosh eta") {
    for (int q = 1; q <= 5; ++q)
        for (int n = 0; n <= 8; ++n)
            CHECK(rel_err(heine::integer_power_coefficient_cosh(q, n, 0.9),
                          heine::coefficient(static_cast<double>(q), n, Z(std::cosh(0.9))).value) < 1e-12);
}

TEST_CASE("definite integral") {
    const double eta = 0.7;
    CHECK(rel_err(heine::definite_integral(1.0, 0, Z(std::cosh(eta))), 2 * pi / std::sinh(eta)) < 1e-14);
    const auto q = heine::oracle::fourier_integral_quadrature(0.5, 2, Z(2.0), 1e-14);
    CHECK(rel_err(heine::definite_integral(0.5, 2, Z(2.0)), 2 * pi * q.value) < 1e-9);
    CHECK(std::abs(heine::definite_integral(0.5, 60, Z(2.0))) < 1e-30);
    CHECK_THROWS_AS(heine::definite_integral(0.5, -1, Z(2.0)), heine::NegativeModeError);
}

TEST_CASE("Gauss form of the binomial") {
    const auto g = heine::gauss_z(1.0, 2.0);
    CHECK(g.z.value() == Complex(1.25));
    CHECK(g.scale == 4.0);
    CHECK_THROWS_AS(heine::gauss_z(3.0, 3.0), heine::DegenerateError);

    const double r1 = 2.0, r2 = 1.0, psi = 0.7;
    const auto h = heine::gauss_z(r1, r2);
    const Complex lhs = std::pow(h.scale, -0.5) * heine::direct_value(0.5, h.z, psi);
    CHECK(rel_err(lhs, 1.0 / std::sqrt(r1 * r1 + r2 * r2 - 2 * r1 * r2 * std::cos(psi))) < 1e-15);
    for (int n = 0; n <= 5; ++n)
        CHECK(rel_err(heine::gauss_coefficient(0.5, n, r1, r2),
                      std::pow(h.scale, -0.5) * heine::coefficient(0.5, n, h.z).value) < 1e-13);
}

TEST_CASE("parity and grid") {
    const auto ex = heine::expand({Complex(0.6, 0.3), Z(Complex(-2.0, 0.5))});
    for (double psi : {0.1, 1.0, 2.5})
        CHECK(ex.evaluate(psi) == ex.evaluate(-psi));
    const auto g = heine::psi_grid();
    CHECK(g.size() == 181);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == pi);
}

TEST_CASE("negative mode") {
    CHECK_THROWS_AS(heine::coefficient(0.5, -1, Z(2.0)), heine::NegativeModeError);
}

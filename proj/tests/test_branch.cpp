#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "heine/branch.hpp"
#include "support.hpp"

using heine::Complex;
using heine::CutArgument;
using heine::test::rel_err;

namespace {

std::string validate_message(Complex z) {
    try {
        CutArgument::validate(z);
    } catch (const heine::DomainError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("domain check names the violated constraint") {
    CHECK(validate_message(0.5).find("on the branch cut") != std::string::npos);
    CHECK(validate_message(-3.0).find("on the branch cut") != std::string::npos);
    CHECK(validate_message(1.0).find("on the branch cut") != std::string::npos);
    CHECK(validate_message(Complex(0.0, 0.5)).find("|z| > 1") != std::string::npos);
    CHECK(validate_message(Complex(0.6, 0.8)).find("|z| > 1") != std::string::npos); // |z| = 1 exactly
    CHECK(validate_message(std::numeric_limits<double>::quiet_NaN()).find("finite") != std::string::npos);
    CHECK(validate_message(2.0).empty());
    CHECK(validate_message(Complex(-2.0, 0.5)).empty());
    CHECK(validate_message(Complex(-2.0, -1e-300)).empty());
}

TEST_CASE("sqrt(z^2 - 1) branch") {
    const auto b = heine::sqrt_zsq_minus_one(CutArgument::validate(2.0));
    CHECK(b.root.imag() == 0.0);
    CHECK(b.root.real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(std::abs(b.plus * b.minus - 1.0) < 1e-15);

    // root ~ z at infinity in every direction, so |minus| < 1 everywhere.
    for (double t = -3.0; t <= 3.0; t += 0.25) {
        const auto z = CutArgument::validate(std::polar(1e6, t));
        const auto s = heine::sqrt_zsq_minus_one(z);
        CHECK(std::abs(s.root / z.value() - 1.0) < 1e-9);
        CHECK(std::abs(s.minus) < 1.0);
    }
}

TEST_CASE("small Joukowski branch avoids cancellation") {
    const auto s = heine::sqrt_zsq_minus_one(CutArgument::validate(1e8));
    // z - sqrt(z^2-1) = 1/(2z) (1 + O(z^-2))
    CHECK(rel_err(s.minus, 0.5e-8) < 1e-15);
}

TEST_CASE("fractional powers jump only across the cut") {
    const double tiny = 1e-12;
    // Across (1, inf): continuous.
    CHECK(rel_err(heine::cut_power(CutArgument::validate(Complex(3.0, tiny)), 0.25),
                  heine::cut_power(CutArgument::validate(Complex(3.0, -tiny)), 0.25)) < 1e-10);
    // Across (-inf, -1): the quarter power changes by e^{i pi/2 * 2}.
    const Complex up = heine::cut_power(CutArgument::validate(Complex(-2.0, tiny)), 0.25);
    const Complex down = heine::cut_power(CutArgument::validate(Complex(-2.0, -tiny)), 0.25);
    CHECK(rel_err(up, -down) < 1e-10);
}

TEST_CASE("cut_power") {
    const auto z = CutArgument::validate(2.0);
    CHECK(heine::cut_power(z, 0.0) == Complex(1.0));
    CHECK(heine::cut_power(z, 0.5).imag() == 0.0);
    CHECK(rel_err(heine::cut_power(z, 0.5), std::sqrt(3.0)) < 1e-15);
    CHECK(rel_err(heine::cut_power(z, -0.25), std::pow(3.0, -0.25)) < 1e-15);

    const auto w = CutArgument::validate(Complex(-2.0, 0.5));
    for (Complex p1 : {Complex(0.3, 0.1), Complex(-1.7, 0.0), Complex(0.25, -2.0)})
        for (Complex p2 : {Complex(1.1, 0.0), Complex(-0.5, 0.5)})
            CHECK(rel_err(heine::cut_power(w, p1) * heine::cut_power(w, p2), heine::cut_power(w, p1 + p2)) < 1e-13);
    CHECK(rel_err(heine::cut_power(w, 1.0), w.value() * w.value() - 1.0) < 1e-14);
}

TEST_CASE("arg decomposition") {
    for (Complex z : {Complex(1.25), Complex(2.0), Complex(1.5, 0.8), Complex(-2.0, 0.5), Complex(-1.1, -0.9)})
        for (double psi = -3.1; psi <= 3.1; psi += 0.2)
            CHECK(heine::arg_decomposition_holds(CutArgument::validate(z), psi));
}

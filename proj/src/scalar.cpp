#include "heine/scalar.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace heine {

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set as
// published in the Numerical Recipes / Wikipedia reference implementation).
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double pi = std::numbers::pi;

Complex lanczos_series(Complex zm1) {
    Complex x = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i)
        x += lanczos_coef[i] / (zm1 + static_cast<double>(i));
    return x;
}

std::string describe(Complex z) {
    return "argument " + std::to_string(z.real()) +
           (z.imag() == 0.0 ? "" : " + " + std::to_string(z.imag()) + "i");
}

} // namespace

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex gamma(Complex z) {
    if (is_nonpositive_integer(z))
        throw PoleError(describe(z));
    // Factorials through 22! are exact in a double.
    if (z.imag() == 0.0 && z.real() <= 23.0 && z.real() == std::floor(z.real())) {
        double f = 1.0;
        for (double k = 2.0; k < z.real(); k += 1.0)
            f *= k;
        return f;
    }
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    const Complex zm1 = z - 1.0;
    const Complex t = zm1 + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((zm1 + 0.5) * std::log(t) - t) * lanczos_series(zm1);
}

Complex rgamma(Complex z) {
    if (is_nonpositive_integer(z))
        return 0.0;
    return 1.0 / gamma(z);
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z))
        throw PoleError(describe(z));
    if (z.real() < 0.5)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    const Complex zm1 = z - 1.0;
    const Complex t = zm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_series(zm1));
}

Complex gamma_ratio(Complex a, Complex b) {
    if (is_nonpositive_integer(a))
        throw PoleError(describe(a));
    if (is_nonpositive_integer(b))
        return 0.0;

    const Complex diff = a - b;
    if (diff.imag() == 0.0 && diff.real() == std::round(diff.real()) && std::abs(diff.real()) <= 64.0) {
        const int m = static_cast<int>(diff.real());
        if (m >= 0)
            return pochhammer_rising(b, static_cast<unsigned>(m));
        return 1.0 / pochhammer_rising(a, static_cast<unsigned>(-m));
    }
    if (std::abs(a) <= 40.0 && std::abs(b) <= 40.0)
        return gamma(a) * rgamma(b);
    return std::exp(log_gamma(a) - log_gamma(b));
}

Complex pochhammer_rising(Complex z, unsigned n) {
    Complex p = 1.0;
    for (unsigned k = 0; k < n; ++k)
        p *= z + static_cast<double>(k);
    return p;
}

Complex pochhammer_falling(Complex z, unsigned n) {
    Complex p = 1.0;
    for (unsigned k = 0; k < n; ++k)
        p *= z - static_cast<double>(k);
    return p;
}

std::uint64_t binomial_exact(unsigned l, unsigned m) {
    if (l > 62)
        throw DomainError("binomial_exact: l = " + std::to_string(l) + " exceeds 62");
    if (m > l)
        return 0;
    if (m > l - m)
        m = l - m;
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < m; ++i)
        r = r * (l - i) / (i + 1); // exact: r is C(l, i+1) after the division
    return static_cast<std::uint64_t>(r);
}

Complex binomial(Complex z, unsigned k) {
    if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 62.0 && z.real() == std::floor(z.real()))
        return static_cast<double>(binomial_exact(static_cast<unsigned>(z.real()), k));
    Complex r = 1.0;
    for (unsigned i = 0; i < k; ++i)
        r *= (z - static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
}

double double_factorial(int m) {
    if (m >= -1) {
        double r = 1.0;
        for (int j = m; j > 1; j -= 2)
            r *= j;
        return r;
    }
    if (m % 2 == 0)
        throw EvenNegativeError("double factorial undefined for even negative m = " + std::to_string(m));
    // m = -(2q+1): (-1)^q 2^q q!/(2q)! = (-1)^q / (2q-1)!!
    const int q = (-m - 1) / 2;
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    return sign / double_factorial(2 * q - 1);
}

Complex exp_i_pi(Complex t) {
    if (t.imag() == 0.0 && 2.0 * t.real() == std::round(2.0 * t.real()) && std::abs(t.real()) < 1e9) {
        const long long h = std::llround(2.0 * t.real());
        switch (((h % 4) + 4) % 4) {
        case 0: return 1.0;
        case 1: return {0.0, 1.0};
        case 2: return -1.0;
        default: return {0.0, -1.0};
        }
    }
    return std::exp(Complex(0.0, pi) * t);
}

int neumann_factor(int n) {
    if (n < 0)
        throw NegativeModeError("Neumann factor requires n >= 0, got " + std::to_string(n));
    return n == 0 ? 1 : 2;
}

} // namespace heine

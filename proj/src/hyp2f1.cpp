#include "heine/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "heine/scalar.hpp"

namespace heine {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

std::optional<unsigned> terminating_degree(Complex a, Complex b) {
    std::optional<unsigned> deg;
    for (Complex p : {a, b}) {
        if (is_nonpositive_integer(p)) {
            const auto m = static_cast<unsigned>(-p.real());
            deg = deg ? std::min(*deg, m) : m;
        }
    }
    return deg;
}

// Canonical (a, b) order so that F(a,b) and F(b,a) run identical arithmetic.
std::pair<Complex, Complex> ordered(Complex a, Complex b) {
    if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag()))
        return {b, a};
    return {a, b};
}

// Sums sum_{k >= k0} t_k with t_{k+1} = t_k (a+k)(b+k)/((c+k)(k+1)) x.
SeriesResult sum_series(Complex a, Complex b, Complex c, Complex x, Complex t0, unsigned k0,
                        std::optional<unsigned> last, const SeriesOptions& opts) {
    SeriesResult r;
    Complex term = t0;
    Complex sum = t0;
    double abs_sum = std::abs(t0);
    double prev_abs = std::abs(t0);
    double ratio = 0.0;
    int small_run = 0;
    r.terms = 1;

    for (unsigned k = k0;; ++k) {
        if (last && k >= *last)
            break;
        if (r.terms >= opts.max_terms)
            throw NoConvergence("2F1 series did not converge within " + std::to_string(opts.max_terms) +
                                " terms");
        const double kd = k;
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * x;
        sum += term;
        ++r.terms;
        const double t = std::abs(term);
        abs_sum += t;
        ratio = prev_abs > 0.0 ? t / prev_abs : 0.0;
        prev_abs = t;
        if (!last) {
            small_run = (t <= opts.tol * std::abs(sum)) ? small_run + 1 : 0;
            // Slow geometric decay near |x| = 1 leaves a tail much larger than
            // the last term, so the tail estimate must also be below tol.
            const double est = ratio < 1.0 ? t * ratio / (1.0 - ratio) : INFINITY;
            if (small_run >= 3 && est <= opts.tol * std::abs(sum))
                break;
        }
    }

    r.value = sum;
    double tail = 0.0;
    if (!last)
        tail = ratio < 1.0 ? prev_abs * ratio / (1.0 - ratio) : prev_abs;
    r.err_est = tail + 4.0 * eps * abs_sum;
    return r;
}

} // namespace

SeriesResult gauss_2f1(const HypParams& p, const SeriesOptions& opts) {
    if (is_nonpositive_integer(p.c))
        throw PoleError("2F1 parameter c is a non-positive integer");
    const auto [a, b] = ordered(p.a, p.b);
    const auto deg = terminating_degree(a, b);
    if (!deg && !(std::abs(p.x) < 1.0))
        throw DomainError("2F1 series requires |x| < 1");
    if (p.x == Complex(0.0))
        return {1.0, 0.0, 1};
    return sum_series(a, b, p.c, p.x, 1.0, 0, deg, opts);
}

SeriesResult gauss_2f1_regularized(const HypParams& p, const SeriesOptions& opts) {
    const auto [a, b] = ordered(p.a, p.b);
    if (!is_nonpositive_integer(p.c)) {
        SeriesResult r = gauss_2f1(p, opts);
        const Complex rg = rgamma(p.c);
        r.value *= rg;
        r.err_est *= std::abs(rg);
        return r;
    }
    // c = -m: terms k <= m vanish; the first surviving term is k0 = m + 1
    // where Gamma(c + k0) = 1.
    const auto m = static_cast<unsigned>(-p.c.real());
    const unsigned k0 = m + 1;
    const auto deg = terminating_degree(a, b);
    if (deg && *deg < k0)
        return {0.0, 0.0, 0};
    if (!deg && !(std::abs(p.x) < 1.0))
        throw DomainError("2F1 series requires |x| < 1");
    Complex t0 = pochhammer_rising(a, k0) * pochhammer_rising(b, k0) * std::pow(p.x, static_cast<int>(k0));
    for (unsigned j = 2; j <= k0; ++j)
        t0 /= static_cast<double>(j);
    if (t0 == Complex(0.0))
        return {0.0, 0.0, 1};
    return sum_series(a, b, p.c, p.x, t0, k0, deg ? std::optional<unsigned>(*deg) : std::nullopt, opts);
}

PfaffForm pfaff_transform(const HypParams& p) {
    if (p.x == Complex(1.0))
        throw DomainError("Pfaff transform undefined at x = 1");
    return {{p.a, p.c - p.b, p.c, p.x / (p.x - 1.0)}, std::pow(1.0 - p.x, -p.a)};
}

std::pair<Complex, Complex> quadratic_transform_sides(Complex a, Complex b, Complex x) {
    const Complex c = a - b + 1.0;
    const Complex x2 = x * x;
    const Complex lhs = gauss_2f1({a, b, c, x2}).value;
    const Complex w = 4.0 * x2 / ((1.0 + x2) * (1.0 + x2));
    const Complex rhs = std::pow(1.0 + x2, -a) * gauss_2f1({a / 2.0, (a + 1.0) / 2.0, c, w}).value;
    return {lhs, rhs};
}

bool quadratic_transform_check(Complex a, Complex b, Complex x) {
    const auto [lhs, rhs] = quadratic_transform_sides(a, b, x);
    return std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(lhs), std::abs(rhs));
}

} // namespace heine

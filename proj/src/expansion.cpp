#include "heine/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "heine/hyp2f1.hpp"
#include "heine/scalar.hpp"

namespace heine {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

CoefficientEntry hypergeometric_route(Complex mu, int n, const CutArgument& z) {
    const Complex zv = z.value();
    Complex pref = std::exp(-mu * std::log(zv));
    for (int k = 0; k < n; ++k)
        pref *= (mu + static_cast<double>(k)) / (2.0 * (k + 1.0) * zv);
    if (pref == Complex(0.0))
        return {0.0, Backend::hyp, 0.0};
    const SeriesResult f = gauss_2f1({(mu + static_cast<double>(n)) / 2.0, (mu + (n + 1.0)) / 2.0, n + 1.0, 1.0 / (zv * zv)});
    const Complex value = pref * f.value;
    return {value, Backend::hyp, std::abs(pref) * f.err_est + std::abs(value) * eps * (8.0 + 2.0 * n)};
}

CoefficientEntry legendre_route(Complex mu, int n, const CutArgument& z) {
    if (is_nonpositive_integer(mu)) {
        const int q = static_cast<int>(-mu.real());
        if (n > q)
            return {0.0, Backend::closed_form, 0.0};
        const QValue qv = q_dispatch(DegreeOrder::make(n - 0.5, q + 0.5), z);
        const double sign = (q % 2 == 0) ? 1.0 : -1.0;
        // (-q)_n / (q+n)!
        const Complex ratio = pochhammer_rising(static_cast<double>(-q), static_cast<unsigned>(n)) *
                              rgamma(static_cast<double>(q + n + 1));
        const Complex pref = -I * std::sqrt(2.0 / pi) * sign * cut_power(z, q / 2.0 + 0.25) * ratio;
        const Complex value = pref * qv.value;
        return {value, qv.backend, std::abs(pref) * qv.err_est + std::abs(value) * 8.0 * eps};
    }
    const QValue qv = q_dispatch(DegreeOrder::make(n - 0.5, mu - 0.5), z);
    const Complex pref = std::sqrt(2.0 / pi) * exp_i_pi(-(mu - 0.5)) * cut_power(z, 0.25 - mu / 2.0) * rgamma(mu);
    const Complex value = pref * qv.value;
    return {value, qv.backend, std::abs(pref) * qv.err_est + std::abs(value) * 8.0 * eps};
}

double min_direct_magnitude(Complex mu, const CutArgument& z) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 8; ++i)
        m = std::min(m, std::abs(direct_value(mu, z, pi * i / 8.0)));
    return m;
}

void fill_bounds(TruncatedExpansion& ex) {
    const auto& e = ex.table.entries;
    ex.tail_bound = geometric_tail(e, ex.decay_ratio);
    double coef_err = 0.0;
    double mag = 0.0;
    for (std::size_t n = 0; n < e.size(); ++n) {
        const double w = n == 0 ? 1.0 : 2.0;
        coef_err += w * e[n].err_est;
        mag += w * std::abs(e[n].value);
    }
    ex.error_bound = ex.tail_bound + coef_err + 4.0 * eps * mag;
}

} // namespace

Complex TruncatedExpansion::evaluate(double psi) const {
    Complex sum = 0.0;
    // Sum from the small end to limit rounding.
    for (std::size_t i = table.entries.size(); i-- > 0;) {
        const double w = i == 0 ? 1.0 : 2.0;
        sum += w * table.entries[i].value * std::cos(static_cast<double>(i) * psi);
    }
    return sum;
}

Complex direct_value(Complex mu, const CutArgument& z, double psi) {
    if (mu == Complex(0.0))
        return 1.0;
    return std::exp(-mu * std::log(z.value() - std::cos(psi)));
}

CoefficientEntry coefficient(Complex mu, int n, const CutArgument& z, CoefficientRoute route) {
    if (n < 0)
        throw NegativeModeError("coefficient requires n >= 0, got " + std::to_string(n));
    if (mu == Complex(0.0))
        return {n == 0 ? Complex(1.0) : Complex(0.0), Backend::hyp, 0.0};
    switch (route) {
    case CoefficientRoute::hypergeometric: return hypergeometric_route(mu, n, z);
    case CoefficientRoute::legendre: return legendre_route(mu, n, z);
    case CoefficientRoute::automatic: break;
    }
    try {
        return legendre_route(mu, n, z);
    } catch (const PoleError&) {
        return hypergeometric_route(mu, n, z);
    }
}

namespace {

// Fills entries[from..to] on up to `threads` workers, strided over n.
void fill_range(std::vector<CoefficientEntry>& entries, Complex mu, const CutArgument& z, CoefficientRoute route,
                unsigned threads, int from, int to) {
    const int count = to - from + 1;
    if (count <= 0)
        return;
    const unsigned workers = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(count));
    if (workers == 1) {
        for (int n = from; n <= to; ++n)
            entries[n] = coefficient(mu, n, z, route);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int n = from + static_cast<int>(w); n <= to; n += static_cast<int>(workers))
                    entries[n] = coefficient(mu, n, z, route);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

CoefficientTable coefficient_table(Complex mu, const CutArgument& z, int n_max, CoefficientRoute route,
                                   unsigned threads) {
    if (n_max < 0)
        throw DomainError("n_max must be >= 0");
    CoefficientTable t{mu, z.value(), std::vector<CoefficientEntry>(static_cast<std::size_t>(n_max) + 1)};
    fill_range(t.entries, mu, z, route, threads, 0, n_max);
    return t;
}

double geometric_tail(const std::vector<CoefficientEntry>& entries, double decay_ratio) {
    if (entries.empty())
        return std::numeric_limits<double>::infinity();
    const std::size_t N = entries.size() - 1;
    if (entries[N].value == Complex(0.0))
        return 0.0;
    // Rounded outward: for mu = 1 the geometric estimate is exact.
    const double last = std::abs(entries[N].value) + entries[N].err_est;
    double rho = decay_ratio;
    for (std::size_t back = 0; back < 2 && N >= back + 1; ++back) {
        const double prev = std::abs(entries[N - back - 1].value);
        if (prev > 0.0)
            rho = std::max(rho, std::abs(entries[N - back].value) / prev);
    }
    rho *= 1.0 + 8.0 * eps;
    if (rho >= 1.0)
        return std::numeric_limits<double>::infinity();
    return 2.0 * last * rho / (1.0 - rho) * (1.0 + 8.0 * eps);
}

TruncatedExpansion expand(const HeineParameters& p) {
    if (p.n_max < 0 || !(p.tol > 0.0))
        throw DomainError("expand requires n_max >= 0 and tol > 0");
    TruncatedExpansion ex;
    ex.decay_ratio = std::abs(sqrt_zsq_minus_one(p.z).minus);

    if (!p.auto_n_max) {
        ex.table = coefficient_table(p.mu, p.z, p.n_max, p.route, p.threads);
        fill_bounds(ex);
        return ex;
    }

    const double target = p.tol * min_direct_magnitude(p.mu, p.z);
    int n = std::max(p.n_max, 8);
    ex.table = coefficient_table(p.mu, p.z, std::min(n, p.n_cap), p.route, p.threads);
    for (;;) {
        if (geometric_tail(ex.table.entries, ex.decay_ratio) < target)
            break;
        if (n >= p.n_cap)
            throw NoConvergence("expansion tail did not reach tol within n_max = " + std::to_string(p.n_cap));
        const int next = std::min(2 * n, p.n_cap);
        ex.table.entries.resize(static_cast<std::size_t>(next) + 1);
        fill_range(ex.table.entries, p.mu, p.z, p.route, p.threads, n + 1, next);
        n = next;
    }

    // Trim to the smallest order meeting the target.
    std::vector<CoefficientEntry> prefix;
    for (std::size_t k = 0; k < ex.table.entries.size(); ++k) {
        prefix.push_back(ex.table.entries[k]);
        if (prefix.size() >= 3 && geometric_tail(prefix, ex.decay_ratio) < target)
            break;
    }
    ex.table.entries = std::move(prefix);
    fill_bounds(ex);
    return ex;
}

TruncatedExpansion positive_power_expand(int q, const CutArgument& z) {
    if (q < 0)
        throw DomainError("positive_power_expand requires q >= 0");
    TruncatedExpansion ex;
    ex.decay_ratio = std::abs(sqrt_zsq_minus_one(z).minus);
    ex.table = coefficient_table(-static_cast<double>(q), z, q, CoefficientRoute::legendre);
    fill_bounds(ex);
    ex.error_bound -= ex.tail_bound;
    ex.tail_bound = 0.0;
    return ex;
}

CoefficientEntry odd_half_integer_coefficient(int q, int n, const CutArgument& z) {
    const QValue qv = q_dispatch(DegreeOrder::make(n - 0.5, static_cast<double>(q)), z);
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    const Complex pref = std::pow(2.0, q + 0.5) * sign / (pi * double_factorial(2 * q - 1)) *
                         cut_power(z, -q / 2.0);
    const Complex value = pref * qv.value;
    return {value, qv.backend, std::abs(pref) * qv.err_est + 8.0 * eps * std::abs(value)};
}

double cosh_closed_form(int q, double eta, double psi) {
    if (!(eta > 0.0))
        throw DomainError("cosh_closed_form requires eta > 0");
    if (q < 1 || q > 4)
        throw DomainError("cosh_closed_form covers q = 1..4");
    const double sh = std::sinh(eta);
    const double ch = std::cosh(eta);
    auto poly = [&](double n) {
        switch (q) {
        case 1: return 1.0;
        case 2: return n * sh + ch;
        case 3: return (n * n - 1.0) * sh * sh + 3.0 * n * sh * ch + 3.0 * ch * ch;
        default:
            return (n * n * n - 4.0 * n) * sh * sh * sh + (6.0 * n * n - 9.0) * sh * sh * ch +
                   15.0 * n * sh * ch * ch + 15.0 * ch * ch * ch;
        }
    };
    const double den = q == 1 ? sh : q == 2 ? std::pow(sh, 3) : q == 3 ? 2.0 * std::pow(sh, 5) : 6.0 * std::pow(sh, 7);

    double sum = 0.0;
    double abs_sum = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int n = 0; n < 10'000'000; ++n) {
        const double w = n == 0 ? 1.0 : 2.0;
        const double mag = w * std::exp(-n * eta) * std::abs(poly(n));
        sum += mag * (poly(n) < 0 ? -1.0 : 1.0) * std::cos(n * psi);
        abs_sum += mag;
        if (n > q && mag < prev_mag && mag <= 1e-18 * abs_sum)
            return sum / den;
        prev_mag = mag;
    }
    throw NoConvergence("cosh_closed_form did not converge");
}

double integer_power_coefficient_cosh(int q, int n, double eta) {
    if (q < 1 || n < 0 || !(eta > 0.0))
        throw DomainError("integer_power_coefficient_cosh requires q >= 1, n >= 0, eta > 0");
    const double sh = std::sinh(eta);
    double sum = 0.0;
    for (int k = 0; k < q; ++k) {
        const double b1 = binomial(static_cast<double>(n + q - 1), static_cast<unsigned>(q - k - 1)).real();
        const double b2 = binomial(static_cast<double>(q + k - 1), static_cast<unsigned>(q - 1)).real();
        sum += b1 * b2 * std::pow(std::exp(-eta) / (2.0 * sh), k);
    }
    return std::exp(-n * eta) / std::pow(sh, q) * sum;
}

Complex definite_integral(Complex mu, int n, const CutArgument& z) {
    if (n < 0)
        throw NegativeModeError("definite_integral requires n >= 0");
    if (is_nonpositive_integer(mu))
        return 2.0 * pi * coefficient(mu, n, z, CoefficientRoute::legendre).value;
    const QValue qv = q_dispatch(DegreeOrder::make(n - 0.5, mu - 0.5), z);
    return std::pow(2.0, 1.5) * std::sqrt(pi) * exp_i_pi(-(mu - 0.5)) * cut_power(z, 0.25 - mu / 2.0) * rgamma(mu) *
           qv.value;
}

GaussArgument gauss_z(double r1, double r2) {
    if (!(r1 > 0.0 && r2 > 0.0))
        throw DomainError("gauss_z requires r1, r2 > 0");
    if (r1 == r2)
        throw DegenerateError("gauss_z: r1 = r2 puts z = 1 on the branch cut");
    return {CutArgument::validate((r1 * r1 + r2 * r2) / (2.0 * r1 * r2)), 2.0 * r1 * r2};
}

Complex gauss_coefficient(Complex mu, int n, double r1, double r2) {
    if (!(r1 > 0.0 && r2 > 0.0) || r1 == r2)
        throw DomainError("gauss_coefficient requires distinct r1, r2 > 0");
    if (n < 0)
        throw NegativeModeError("gauss_coefficient requires n >= 0");
    const double hi = std::max(r1, r2);
    const double lo = std::min(r1, r2);
    const double t = lo / hi;
    Complex pref = std::exp(-2.0 * mu * std::log(hi));
    for (int k = 0; k < n; ++k)
        pref *= (mu + static_cast<double>(k)) / (k + 1.0) * t;
    const SeriesResult f = gauss_2f1({mu + static_cast<double>(n), mu, n + 1.0, t * t});
    return pref * f.value;
}

std::vector<double> psi_grid(int points) {
    if (points < 2)
        throw DomainError("psi grid needs at least 2 points");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        g[i] = pi * i / (points - 1);
    return g;
}

} // namespace heine

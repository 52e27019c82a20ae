#include "heine/legendre_q.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "heine/elliptic.hpp"
#include "heine/scalar.hpp"

namespace heine {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};
constexpr double lattice_tol = 1e-12;

bool near_integer(Complex v, int& out) {
    if (std::abs(v.imag()) > lattice_tol)
        return false;
    const double r = std::round(v.real());
    if (std::abs(v.real() - r) > lattice_tol || std::abs(r) > 1e9)
        return false;
    out = static_cast<int>(r);
    return true;
}

bool near_cut(const CutArgument& z) { return std::abs(z.value() - 1.0) < 1e-6; }

QValue tagged(Complex v, Backend b, double err, const CutArgument& z) {
    return {v, b, err, near_cut(z)};
}

std::string fmt_degree_order(const DegreeOrder& dq) {
    auto c = [](Complex v) {
        return std::to_string(v.real()) + (v.imag() != 0.0 ? "+" + std::to_string(v.imag()) + "i" : "");
    };
    return "degree " + c(dq.degree) + ", order " + c(dq.order);
}

// Real seeds and recurrences for integer order on real z > 1.
struct RealQ {
    double value;
    double err;
};

std::array<RealQ, 2> elliptic_seeds(int order, double x) {
    const double k = std::sqrt(2.0 / (x + 1.0));
    const EllipticPair ke = elliptic_ke(k, std::sqrt((x - 1.0) / (x + 1.0)));
    const double kk = ke.k;
    const double ee = ke.e;
    if (order == 0) {
        const double q0 = k * kk;
        const double t1 = x * k * kk;
        const double t2 = std::sqrt(2.0 * (x + 1.0)) * ee;
        return {{{q0, 4.0 * eps * std::abs(q0)}, {t1 - t2, 4.0 * eps * (std::abs(t1) + std::abs(t2))}}};
    }
    const double d = std::sqrt(2.0 * (x - 1.0));
    const double q0 = -ee / d;
    const double t1 = -x * ee / d;
    const double t2 = std::sqrt((x - 1.0) / 2.0) * kk;
    return {{{q0, 4.0 * eps * std::abs(q0)}, {t1 + t2, 4.0 * eps * (std::abs(t1) + std::abs(t2))}}};
}

// Q_{n-1/2}^{order}(x), order in {0, 1}, by the forward degree recurrence
//   (nu - mu + 1) Q_{nu+1} = (2 nu + 1) x Q_nu - (nu + mu) Q_{nu-1}.
RealQ degree_chain(int n, int order, double x) {
    const auto seeds = elliptic_seeds(order, x);
    if (n == 0)
        return seeds[0];
    RealQ prev = seeds[0];
    RealQ cur = seeds[1];
    for (int m = 1; m < n; ++m) {
        const double a = 2.0 * m * x;
        const double b = m - 0.5 + order;
        const double d = m + 0.5 - order;
        const double next = (a * cur.value - b * prev.value) / d;
        const double err = (std::abs(a) * cur.err + std::abs(b) * prev.err) / std::abs(d) +
                           2.0 * eps * (std::abs(a * cur.value) + std::abs(b * prev.value)) / std::abs(d);
        prev = cur;
        cur = {next, err};
    }
    return cur;
}

bool rule_half_integer_order(const DegreeOrder& dq, const CutArgument&) { return dq.half_integer_order; }

bool rule_toroidal(const DegreeOrder& dq, const CutArgument& z) {
    return dq.integer_order && dq.half_integer_degree && z.is_real() && std::abs(dq.order_index) <= 8 &&
           degree_recurrence_amplification(std::abs(dq.degree_index), z) <= 1e4;
}

bool rule_general(const DegreeOrder&, const CutArgument&) { return true; }

constexpr std::array<DispatchRule, 3> rules = {{
    {"half_integer_order", "order = q - 1/2 with q integer", Backend::closed_form, &rule_half_integer_order},
    {"toroidal_real",
     "order integer, |order| <= 8, degree = n - 1/2, z real > 1, |z + sqrt(z^2-1)|^(2|n|) <= 1e4",
     Backend::elliptic_rec, &rule_toroidal},
    {"general", "otherwise", Backend::hyp, &rule_general},
}};

} // namespace

std::string_view to_string(Backend b) {
    switch (b) {
    case Backend::hyp: return "hyp";
    case Backend::closed_form: return "closed_form";
    case Backend::elliptic_rec: return "elliptic_rec";
    case Backend::order_rec: return "order_rec";
    }
    return "unknown";
}

std::optional<Backend> backend_from_string(std::string_view s) {
    for (Backend b : {Backend::hyp, Backend::closed_form, Backend::elliptic_rec, Backend::order_rec})
        if (to_string(b) == s)
            return b;
    return std::nullopt;
}

DegreeOrder DegreeOrder::make(Complex degree, Complex order) {
    DegreeOrder dq{degree, order};
    int k = 0;
    if (near_integer(degree + 0.5, k)) {
        dq.half_integer_degree = true;
        dq.degree_index = k;
        dq.degree = k - 0.5;
    }
    if (near_integer(order, k)) {
        dq.integer_order = true;
        dq.order_index = k;
        dq.order = static_cast<double>(k);
    } else if (near_integer(order + 0.5, k)) {
        dq.half_integer_order = true;
        dq.order_index = k;
        dq.order = k - 0.5;
    }
    return dq;
}

DegreeOrder DegreeOrder::canonical() const {
    DegreeOrder c = *this;
    if (c.half_integer_degree && c.degree_index < 0) {
        c.degree_index = -c.degree_index;
        c.degree = c.degree_index - 0.5;
    }
    return c;
}

QValue q_via_hypergeometric(const DegreeOrder& dq, const CutArgument& z, const SeriesOptions& opts) {
    const Complex a = dq.degree + 0.5;
    const Complex b = dq.order + 0.5;
    if (is_nonpositive_integer(a + b))
        throw PoleError("Gamma(nu + mu + 1) at " + fmt_degree_order(dq));

    const Complex zv = z.value();
    const HypParams hp{(a + b) / 2.0, (a + b + 1.0) / 2.0, a + 1.0, 1.0 / (zv * zv)};

    Complex gamma_part;
    SeriesResult f;
    if (is_nonpositive_integer(a + 1.0)) {
        f = gauss_2f1_regularized(hp, opts);
        gamma_part = gamma(a + b);
    } else {
        f = gauss_2f1(hp, opts);
        gamma_part = gamma_ratio(a + b, a + 1.0);
    }

    const Complex log_mag = -a * std::log(2.0) - (a + b) * std::log(zv) + (b / 2.0 - 0.25) * log_zsq_minus_one(z);
    const Complex pref = std::sqrt(pi / 2.0) * gamma_part * std::exp(log_mag) * exp_i_pi(dq.order);
    const Complex value = pref * f.value;
    const double err = std::abs(pref) * f.err_est + std::abs(value) * eps * (16.0 + std::abs(log_mag));
    return tagged(value, Backend::hyp, err, z);
}

QValue q_half_order_plus(Complex nu, const CutArgument& z) {
    const SqrtBranch s = sqrt_zsq_minus_one(z);
    const Complex lg = (-nu - 0.5) * std::log(s.plus);
    const Complex v = I * std::sqrt(pi / 2.0) * cut_power(z, -0.25) * std::exp(lg);
    return tagged(v, Backend::closed_form, std::abs(v) * eps * (8.0 + std::abs(lg)), z);
}

QValue q_half_order_minus(Complex nu, const CutArgument& z) {
    if (2.0 * nu + 1.0 == Complex(0.0))
        throw PoleError("Q_nu^{-1/2} at nu = -1/2");
    const SqrtBranch s = sqrt_zsq_minus_one(z);
    const Complex lg = (-nu - 0.5) * std::log(s.plus);
    const Complex v = -I * std::sqrt(2.0 * pi) / (2.0 * nu + 1.0) * cut_power(z, -0.25) * std::exp(lg);
    return tagged(v, Backend::closed_form, std::abs(v) * eps * (8.0 + std::abs(lg)), z);
}

QValue q_half_integer_order_closed_form(Complex nu, int q, const CutArgument& z) {
    const SqrtBranch s = sqrt_zsq_minus_one(z);
    const Complex w = -s.minus / (2.0 * s.root);
    const int last = q >= 1 ? q - 1 : -q;
    const Complex top = static_cast<double>(q) + nu + 0.5;

    Complex sum = 0.0;
    double abs_sum = 0.0;
    Complex coef = 1.0; // (q)_k (1-q)_k / k!
    Complex wk = 1.0;
    for (int k = 0; k <= last; ++k) {
        // Gamma(q+nu+1/2) / Gamma(nu+3/2+k): integer offset, evaluated as a product.
        const Complex term = gamma_ratio(top, nu + 1.5 + static_cast<double>(k)) * coef * wk;
        sum += term;
        abs_sum += std::abs(term);
        coef *= (static_cast<double>(q + k) * static_cast<double>(1 - q + k)) / static_cast<double>(k + 1);
        wk *= w;
    }

    const Complex lg = (-nu - 0.5) * std::log(s.plus);
    const double sign = (q % 2 == 0) ? -1.0 : 1.0; // (-1)^{q+1}
    const Complex pref = sign * I * std::sqrt(pi / 2.0) * std::exp(lg) * cut_power(z, -0.25);
    const Complex value = pref * sum;
    const double err = std::abs(pref) * 8.0 * eps * abs_sum * (1.0 + last) + std::abs(value) * eps * (8.0 + std::abs(lg));
    return tagged(value, Backend::closed_form, err, z);
}

QValue q_integer_order_elliptic(int n, int order, const CutArgument& z) {
    if (!z.is_real())
        throw DomainError("elliptic backend requires real z > 1");
    n = std::abs(n);
    const double x = z.value().real();
    const int m = std::abs(order);

    RealQ result{};
    if (m <= 1) {
        result = degree_chain(n, m, x);
    } else {
        // Upward order recurrence at fixed degree nu = n - 1/2.
        const double nu = n - 0.5;
        const double s = std::sqrt(x - 1.0) * std::sqrt(x + 1.0);
        RealQ q0 = degree_chain(n, 0, x);
        RealQ q1 = degree_chain(n, 1, x);
        for (int mu = 0; mu + 2 <= m; ++mu) {
            const double c1 = -2.0 * (mu + 1.0) * x / s;
            const double c2 = (nu - mu) * (nu + mu + 1.0);
            const double v = c1 * q1.value + c2 * q0.value;
            const double e = std::abs(c1) * q1.err + std::abs(c2) * q0.err +
                             2.0 * eps * (std::abs(c1 * q1.value) + std::abs(c2 * q0.value));
            q0 = q1;
            q1 = {v, e};
        }
        result = q1;
    }

    Complex value = result.value;
    double err = result.err;
    if (order < 0) {
        // Q_nu^{-m} = Gamma(nu-m+1)/Gamma(nu+m+1) Q_nu^m for integer m.
        const Complex r = gamma_ratio(n + 0.5 - m, n + 0.5 + m);
        value *= r;
        err *= std::abs(r);
    }
    return tagged(value, Backend::elliptic_rec, err, z);
}

QValue q_unit_order_elliptic(int m, const CutArgument& z) { return q_integer_order_elliptic(m, 1, z); }

QValue q_order_recurrence_step(const DegreeOrder& dq, const CutArgument& z, const QValue& q_mu,
                               const QValue& q_mu_plus_1) {
    const Complex nu = dq.degree;
    const Complex mu = dq.order;
    const Complex c1 = -2.0 * (mu + 1.0) * z.value() / sqrt_zsq_minus_one(z).root;
    const Complex c2 = (nu - mu) * (nu + mu + 1.0);
    const Complex t1 = c1 * q_mu_plus_1.value;
    const Complex t2 = c2 * q_mu.value;
    const double err = std::abs(c1) * q_mu_plus_1.err_est + std::abs(c2) * q_mu.err_est +
                       4.0 * eps * (std::abs(t1) + std::abs(t2));
    return {t1 + t2, Backend::order_rec, err,
            near_cut(z) || q_mu.conditioning_warning || q_mu_plus_1.conditioning_warning};
}

QValue q_via_order_recurrence(Complex nu, int q, const CutArgument& z) {
    if (q < 0)
        throw DomainError("order recurrence backend requires order >= -1/2");
    QValue lo = q_half_order_minus(nu, z);
    lo.backend = Backend::order_rec;
    if (q == 0)
        return lo;
    QValue hi = q_half_order_plus(nu, z);
    hi.backend = Backend::order_rec;
    for (int k = 0; k + 1 < q; ++k) {
        const QValue next = q_order_recurrence_step(DegreeOrder::make(nu, k - 0.5), z, lo, hi);
        lo = hi;
        hi = next;
    }
    return hi;
}

QValue negative_order_relation(int p, int n, const CutArgument& z) {
    if (n < 0)
        throw DomainError("negative_order_relation requires n >= 0");
    p = std::abs(p);
    if (p - n <= 0)
        throw PoleError("Gamma(p - n) with p - n = " + std::to_string(p - n));
    const QValue pos = q_dispatch(DegreeOrder::make(p - 0.5, n + 0.5), z);
    const Complex factor = -gamma_ratio(static_cast<double>(p - n), static_cast<double>(p + n + 1));
    return {factor * pos.value, pos.backend, std::abs(factor) * pos.err_est, pos.conditioning_warning};
}

bool negative_degree_symmetry(int n, Complex mu, const CutArgument& z) {
    if (n == 0)
        return true;
    const int m = std::abs(n);
    const QValue rhs = q_dispatch(DegreeOrder::make(m - 0.5, mu), z);
    const DegreeOrder raw = DegreeOrder::make(-m - 0.5, mu);

    QValue lhs;
    if (raw.half_integer_order) {
        lhs = q_dispatch(raw, z);
    } else {
        try {
            lhs = q_via_hypergeometric(raw, z);
        } catch (const PoleError&) {
            lhs = q_dispatch(raw, z);
        }
    }
    const double scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
    return std::abs(lhs.value - rhs.value) <= std::max(1e-11 * scale, lhs.err_est + rhs.err_est);
}

double degree_recurrence_amplification(int n, const CutArgument& z) {
    return std::pow(std::abs(sqrt_zsq_minus_one(z).plus), 2.0 * std::abs(n));
}

std::span<const DispatchRule> dispatch_table() { return rules; }

std::vector<Backend> applicable_backends(const DegreeOrder& dq, const CutArgument& z) {
    const DegreeOrder c = dq.canonical();
    std::vector<Backend> out{Backend::hyp};
    if (c.half_integer_order)
        out.push_back(Backend::closed_form);
    if (c.integer_order && c.half_integer_degree && z.is_real())
        out.push_back(Backend::elliptic_rec);
    if (c.half_integer_order && c.order_index >= 0)
        out.push_back(Backend::order_rec);
    return out;
}

QValue q_dispatch(const DegreeOrder& dq, const CutArgument& z, std::optional<Backend> force) {
    const DegreeOrder c = dq.canonical();
    Backend backend = Backend::hyp;
    if (force) {
        const auto ok = applicable_backends(c, z);
        if (std::find(ok.begin(), ok.end(), *force) == ok.end())
            throw DomainError("backend " + std::string(to_string(*force)) + " not applicable to " +
                              fmt_degree_order(c));
        backend = *force;
    } else {
        for (const DispatchRule& r : rules) {
            if (r.matches(c, z)) {
                backend = r.backend;
                break;
            }
        }
    }

    switch (backend) {
    case Backend::closed_form: return q_half_integer_order_closed_form(c.degree, c.order_index, z);
    case Backend::elliptic_rec: return q_integer_order_elliptic(c.degree_index, c.order_index, z);
    case Backend::order_rec: return q_via_order_recurrence(c.degree, c.order_index, z);
    case Backend::hyp: break;
    }
    return q_via_hypergeometric(c, z);
}

} // namespace heine

#include "heine/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "heine/branch.hpp"
#include "heine/elliptic.hpp"
#include "heine/expansion.hpp"
#include "heine/hyp2f1.hpp"
#include "heine/legendre_q.hpp"
#include "heine/oracle.hpp"
#include "heine/scalar.hpp"

namespace heine {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr Complex I{0.0, 1.0};

constexpr std::array<std::string_view, 7> suites = {"scalars", "branch", "hyp", "elliptic",
                                                    "legendre", "heine", "oracle-cross"};

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double rel(Complex a, Complex b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// A point of the cut domain: real in (1.05, 5) or on a complex shell
// 1.2 <= |z| <= 4 away from the cut.
CutArgument sample_z(Rng& rng) {
    if (uniform_int(rng, 0, 1) == 0)
        return CutArgument::validate(uniform(rng, 1.05, 5.0));
    for (;;) {
        const Complex z = std::polar(uniform(rng, 1.2, 4.0), uniform(rng, -2.8, 2.8));
        if (std::abs(z.imag()) > 0.1 || z.real() > 1.05)
            return CutArgument::validate(z);
    }
}

Complex sample_complex(Rng& rng, double r) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

// Collects samples for one property. The body reports deviations with
// add(); an escaping exception fails the property with its message.
class Check {
public:
    Check(VerifyReport& out, std::string_view suite, std::string name, double threshold)
        : out_(out) {
        r_.suite = suite;
        r_.name = std::move(name);
        r_.threshold = threshold;
    }

    void add(double deviation) {
        ++r_.samples;
        if (!(deviation <= r_.worst))
            r_.worst = std::isnan(deviation) ? INFINITY : std::max(r_.worst, deviation);
    }

    void note(std::string s) { r_.note = std::move(s); }

    void run(const std::function<void(Check&)>& body) {
        try {
            body(*this);
            r_.passed = r_.samples > 0 && r_.worst <= r_.threshold;
        } catch (const std::exception& e) {
            r_.passed = false;
            r_.note = std::string("exception: ") + e.what();
        }
        out_.properties.push_back(r_);
    }

private:
    VerifyReport& out_;
    PropertyReport r_;
};

void suite_scalars(VerifyReport& out, Rng& rng) {
    const std::string_view s = "scalars";
    Check(out, s, "falling/rising reflection (-1)^n [-z]_n = (z)_n", 1e-12).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            const Complex z = sample_complex(rng, 6.0);
            const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, 12));
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            c.add(rel(sign * pochhammer_falling(-z, n), pochhammer_rising(z, n)));
        }
    });
    Check(out, s, "pochhammer = gamma(z+n)/gamma(z)", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            const Complex z = sample_complex(rng, 8.0) + Complex(0.0, 0.05);
            const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, 12));
            c.add(rel(pochhammer_rising(z, n), gamma(z + static_cast<double>(n)) / gamma(z)));
        }
    });
    Check(out, s, "binomial symmetry C(l,m) = C(l,l-m), l <= 20, exact", 0.0).run([&](Check& c) {
        for (unsigned l = 0; l <= 20; ++l)
            for (unsigned m = 0; m <= l; ++m)
                c.add(std::abs(binomial(static_cast<double>(l), m) - binomial(static_cast<double>(l), l - m)));
    });
    Check(out, s, "gamma reflection gamma(z) gamma(1-z) sin(pi z)/pi = 1", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            Complex z = sample_complex(rng, 10.0);
            if (std::abs(z.imag()) < 0.05 && std::abs(z.real() - std::round(z.real())) < 0.05)
                z += 0.25;
            c.add(std::abs(gamma(z) * gamma(1.0 - z) * std::sin(pi * z) / pi - 1.0));
        }
    });
    Check(out, s, "double factorial = 2^((m+1)/2) gamma(m/2+1)/sqrt(pi), odd m", 1e-13).run([&](Check& c) {
        for (int m = -21; m <= 21; m += 2) {
            const double ref = std::pow(2.0, (m + 1) / 2.0) * gamma(m / 2.0 + 1.0).real() / std::sqrt(pi);
            c.add(rel(double_factorial(m), ref));
        }
    });
    Check(out, s, "gamma(n+1) = n! for n <= 29", 1e-13).run([&](Check& c) {
        double f = 1.0;
        for (int n = 0; n <= 29; ++n) {
            if (n > 0)
                f *= n;
            c.add(rel(gamma(n + 1.0), f));
        }
    });
}

void suite_branch(VerifyReport& out, Rng& rng) {
    const std::string_view s = "branch";
    Check(out, s, "(z - sqrt(z^2-1)) (z + sqrt(z^2-1)) = 1", 1e-13).run([&](Check& c) {
        for (int i = 0; i < 300; ++i) {
            const SqrtBranch b = sqrt_zsq_minus_one(sample_z(rng));
            c.add(std::abs(b.plus * b.minus - 1.0));
        }
    });
    Check(out, s, "root^2 = z^2 - 1", 1e-13).run([&](Check& c) {
        for (int i = 0; i < 300; ++i) {
            const CutArgument z = sample_z(rng);
            const Complex zz = z.value();
            c.add(rel(sqrt_zsq_minus_one(z).root * sqrt_zsq_minus_one(z).root, (zz - 1.0) * (zz + 1.0)));
        }
    });
    Check(out, s, "arg(z - cos psi) = arg z + arg(1 - cos psi / z) (failures)", 0.0).run([&](Check& c) {
        for (int i = 0; i < 300; ++i) {
            const CutArgument z = sample_z(rng);
            c.add(arg_decomposition_holds(z, uniform(rng, -pi, pi)) ? 0.0 : 1.0);
        }
    });
    Check(out, s, "cut_power(z,p1) cut_power(z,p2) = cut_power(z,p1+p2)", 1e-12).run([&](Check& c) {
        for (int i = 0; i < 300; ++i) {
            const CutArgument z = sample_z(rng);
            const Complex p1 = sample_complex(rng, 2.0);
            const Complex p2 = sample_complex(rng, 2.0);
            c.add(rel(cut_power(z, p1) * cut_power(z, p2), cut_power(z, p1 + p2)));
        }
    });
    Check(out, s, "real z > 1 gives real positive sqrt(z^2-1) (failures)", 0.0).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const SqrtBranch b = sqrt_zsq_minus_one(CutArgument::validate(uniform(rng, 1.0 + 1e-9, 50.0)));
            c.add(b.root.imag() == 0.0 && b.root.real() > 0.0 ? 0.0 : 1.0);
        }
    });
}

void suite_hyp(VerifyReport& out, Rng& rng) {
    const std::string_view s = "hyp";
    auto params = [&](double xr) {
        HypParams p;
        p.a = sample_complex(rng, 3.0);
        p.b = sample_complex(rng, 3.0);
        p.c = sample_complex(rng, 3.0) + Complex(3.5, 0.0);
        p.x = std::polar(uniform(rng, 0.0, xr), uniform(rng, -pi, pi));
        return p;
    };
    Check(out, s, "F(a,b;c;x) = F(b,a;c;x) bit for bit (mismatches)", 0.0).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            HypParams p = params(0.9);
            const Complex f1 = gauss_2f1(p).value;
            std::swap(p.a, p.b);
            const Complex f2 = gauss_2f1(p).value;
            c.add(f1 == f2 ? 0.0 : 1.0);
        }
    });
    Check(out, s, "truncation error <= 10 err_est in the 1/z^2 regime (ratio)", 10.0).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            const CutArgument z = sample_z(rng);
            const Complex mu = sample_complex(rng, 2.0) + 0.5;
            const double n = uniform_int(rng, 0, 12);
            const HypParams p{(mu + n) / 2.0, (mu + n + 1.0) / 2.0, n + 1.0, 1.0 / (z.value() * z.value())};
            const SeriesResult coarse = gauss_2f1(p);
            const SeriesResult fine = gauss_2f1(p, {.tol = 1e-17, .max_terms = 100000});
            const double floor = 8.0 * eps * std::abs(fine.value);
            c.add(std::max(0.0, std::abs(coarse.value - fine.value) - floor) / coarse.err_est);
        }
    });
    Check(out, s, "Pfaff transform applied twice is the identity", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            HypParams p = params(0.45);
            p.x = Complex(std::min(p.x.real(), 0.3), p.x.imag());
            const PfaffForm once = pfaff_transform(p);
            const PfaffForm twice = pfaff_transform(once.params);
            const Complex direct = gauss_2f1(p).value;
            c.add(rel(once.prefactor * twice.prefactor * gauss_2f1(twice.params).value, direct));
            c.add(rel(twice.params.b, p.b) + std::abs(twice.params.x - p.x));
        }
    });
    Check(out, s, "Pfaff transform preserves the value", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            HypParams p = params(0.45);
            p.x = Complex(std::min(p.x.real(), 0.3), p.x.imag());
            const PfaffForm f = pfaff_transform(p);
            c.add(rel(f.prefactor * gauss_2f1(f.params).value, gauss_2f1(p).value));
        }
    });
    Check(out, s, "quadratic transformation a = mu+n, b = mu", 1e-10).run([&](Check& c) {
        for (int i = 0; i < 150; ++i) {
            const Complex mu = sample_complex(rng, 1.5) + 1.0;
            const double n = uniform_int(rng, 0, 6);
            const Complex x = std::polar(uniform(rng, 0.0, 0.5), uniform(rng, -0.6, 0.6));
            const auto [lhs, rhs] = quadratic_transform_sides(mu + n, mu, x);
            c.add(rel(lhs, rhs));
        }
    });
    Check(out, s, "terminating series = (1-x)^m, error over (1+|x|)^m", 1e-14).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const int m = uniform_int(rng, 0, 8);
            const Complex x = sample_complex(rng, 3.0);
            // 2F1(-m, b; b; x) = (1 - x)^m
            const Complex b = sample_complex(rng, 2.0) + 3.0;
            // Near x = 1 the sum cancels; measure against the sum of |terms|.
            const Complex got = gauss_2f1({-static_cast<double>(m), b, b, x}).value;
            c.add(std::abs(got - std::pow(1.0 - x, m)) / std::pow(1.0 + std::abs(x), m));
        }
    });
}

void suite_elliptic(VerifyReport& out, Rng& rng) {
    const std::string_view s = "elliptic";
    Check(out, s, "K(k) against quadrature", 1e-13).run([&](Check& c) {
        for (int i = 0; i < 40; ++i) {
            const double k = i == 0 ? std::sqrt(2.0 / 3.0) : uniform(rng, 0.0, 0.99);
            const auto q = oracle::integrate(
                [k](double t) { return Complex(1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t))); }, 0.0,
                pi / 2.0, 1e-15);
            c.add(rel(elliptic_k(k), q.value));
        }
    });
    Check(out, s, "E(k) against quadrature", 1e-13).run([&](Check& c) {
        for (int i = 0; i < 40; ++i) {
            const double k = i == 0 ? std::sqrt(2.0 / 3.0) : uniform(rng, 0.0, 0.999);
            const auto q = oracle::integrate(
                [k](double t) { return Complex(std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t))); }, 0.0,
                pi / 2.0, 1e-15);
            c.add(rel(elliptic_e(k), q.value));
        }
    });
    Check(out, s, "Legendre relation E K' + E' K - K K' = pi/2", 1e-13).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const double z = uniform(rng, 1.001, 100.0);
            const double k = std::sqrt(2.0 / (z + 1.0));
            const double kp = std::sqrt((z - 1.0) / (z + 1.0));
            const EllipticPair a = elliptic_ke(k, kp);
            const EllipticPair b = elliptic_ke(kp, k);
            c.add(std::abs(a.e * b.k + b.e * a.k - a.k * b.k - pi / 2.0) / (pi / 2.0));
        }
    });
}

// Samples (n, q, z) and compares every applicable backend pairwise. Half of
// the samples use order q - 1/2, the other half integer order q.
void backend_agreement(Check& c, Rng& rng) {
    int done = 0;
    while (done < 200) {
        const int n = uniform_int(rng, 0, 8);
        const int q = uniform_int(rng, -2, 4);
        const bool half = done % 2 == 0;
        const CutArgument z = sample_z(rng);
        const DegreeOrder dq = DegreeOrder::make(n - 0.5, half ? q - 0.5 : static_cast<double>(q));
        std::vector<QValue> vals;
        for (Backend b : applicable_backends(dq, z)) {
            try {
                vals.push_back(q_dispatch(dq, z, b));
            } catch (const PoleError&) {
            }
        }
        if (vals.size() < 2)
            continue;
        ++done;
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j) {
                const double allowed = std::max(1e-10 * std::abs(vals[i].value), vals[i].err_est + vals[j].err_est);
                c.add(std::abs(vals[i].value - vals[j].value) / allowed);
            }
    }
}

void suite_legendre(VerifyReport& out, Rng& rng) {
    const std::string_view s = "legendre";
    Check(out, s, "backend agreement within max(1e-10 rel, err_est) (ratio)", 1.0).run([&](Check& c) {
        backend_agreement(c, rng);
    });
    Check(out, s, "unit-order negativity Q^1_{m-1/2}(z) < 0 (violations)", 0.0).run([&](Check& c) {
        for (double x : {1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0})
            for (int m = 0; m <= 10; ++m) {
                const QValue v = q_dispatch(DegreeOrder::make(m - 0.5, 1.0), CutArgument::validate(x));
                c.add(v.value.real() < 0.0 && v.value.imag() == 0.0 ? 0.0 : 1.0);
            }
    });
    Check(out, s, "half-integer order on real z is purely imaginary (|re|/|Q|)", 1e-14).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const CutArgument z = CutArgument::validate(uniform(rng, 1.01, 20.0));
            const QValue v = q_half_integer_order_closed_form(uniform(rng, -0.4, 6.0), uniform_int(rng, -2, 4), z);
            c.add(std::abs(v.value.real()) / std::abs(v.value));
        }
    });
    Check(out, s, "order recurrence residual on closed-form values", 1e-10).run([&](Check& c) {
        for (int i = 0; i < 150; ++i) {
            const CutArgument z = sample_z(rng);
            const Complex nu = i % 3 == 0 ? sample_complex(rng, 3.0) + 3.5 : Complex(uniform_int(rng, 0, 10) - 0.5);
            const int q = uniform_int(rng, -2, 8);
            QValue v0, v1, v2;
            try {
                v0 = q_half_integer_order_closed_form(nu, q, z);
                v1 = q_half_integer_order_closed_form(nu, q + 1, z);
                v2 = q_half_integer_order_closed_form(nu, q + 2, z);
            } catch (const PoleError&) {
                continue;
            }
            const Complex mu = q - 0.5;
            const Complex c1 = -2.0 * (mu + 1.0) * z.value() / sqrt_zsq_minus_one(z).root;
            const Complex c2 = (nu - mu) * (nu + mu + 1.0);
            const double scale = std::max({std::abs(v2.value), std::abs(c1 * v1.value), std::abs(c2 * v0.value)});
            c.add(std::abs(v2.value - c1 * v1.value - c2 * v0.value) / scale);
        }
    });
    Check(out, s, "unit-order degree recurrence residual on elliptic output", 1e-10).run([&](Check& c) {
        for (double x : {1.1, 1.5, 2.0, 3.0, 10.0})
            for (int m = 1; m <= 10; ++m) {
                const CutArgument z = CutArgument::validate(x);
                const double a = q_unit_order_elliptic(m - 1, z).value.real();
                const double b = q_unit_order_elliptic(m, z).value.real();
                const double d = q_unit_order_elliptic(m + 1, z).value.real();
                const double t1 = 4.0 * m * x / (2.0 * m - 1.0) * b;
                const double t2 = (2.0 * m + 1.0) / (2.0 * m - 1.0) * a;
                c.add(std::abs(d - t1 + t2) / std::max({std::abs(d), std::abs(t1), std::abs(t2)}));
            }
    });
    Check(out, s, "negative-degree symmetry Q_{-n-1/2} = Q_{n-1/2} (failures)", 0.0).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const Complex mu = i % 2 == 0 ? Complex(uniform_int(rng, -2, 4) - 0.5) : sample_complex(rng, 2.0) + 0.5;
            const int n = uniform_int(rng, -8, 8);
            const CutArgument z = sample_z(rng);
            // Q itself is undefined where Gamma(nu + mu + 1) has a pole.
            if (is_nonpositive_integer(static_cast<double>(std::abs(n)) + mu + 0.5))
                continue;
            c.add(negative_degree_symmetry(n, mu, z) ? 0.0 : 1.0);
        }
    });
    Check(out, s, "negative-order relation against closed form", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 150; ++i) {
            const int p = uniform_int(rng, 1, 10);
            const int n = uniform_int(rng, 0, p - 1);
            const CutArgument z = sample_z(rng);
            const QValue lhs = negative_order_relation(p, n, z);
            const QValue ref = q_half_integer_order_closed_form(p - 0.5, -n, z);
            c.add(rel(lhs.value, ref.value));
        }
    });
    Check(out, s, "closed-form anchors Q^{1/2}, Q^{-1/2}, Q^{3/2}_{-1/2} vs hyp", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const CutArgument z = sample_z(rng);
            const Complex nu = i % 2 == 0 ? sample_complex(rng, 2.0) + 2.5 : Complex(uniform_int(rng, 0, 6) - 0.5);
            c.add(rel(q_half_order_plus(nu, z).value, q_via_hypergeometric(DegreeOrder::make(nu, 0.5), z).value));
            if (nu != Complex(-0.5))
                c.add(rel(q_half_order_minus(nu, z).value,
                          q_via_hypergeometric(DegreeOrder::make(nu, -0.5), z).value));
            const Complex anchor = -I * std::sqrt(pi / 2.0) * z.value() * cut_power(z, -0.75);
            c.add(rel(anchor, q_via_hypergeometric(DegreeOrder::make(-0.5, 1.5), z).value));
        }
    });
    Check(out, s, "order-recurrence chain at z = 1.1 vs closed form", 1e-7).run([&](Check& c) {
        const CutArgument z = CutArgument::validate(1.1);
        for (int n = 1; n <= 8; ++n)
            for (int q = 0; q <= 6; ++q)
                c.add(rel(q_via_order_recurrence(n - 0.5, q, z).value,
                          q_half_integer_order_closed_form(n - 0.5, q, z).value));
    });
}

// Worst relative reconstruction error over the default grid, with the
// bound scaled to the smallest direct value.
struct Reconstruction {
    double worst_rel = 0.0;
    double rel_bound = 0.0;
};

Reconstruction reconstruct(const TruncatedExpansion& ex, Complex mu, const CutArgument& z) {
    Reconstruction r;
    double min_direct = INFINITY;
    for (double psi : psi_grid()) {
        const Complex d = direct_value(mu, z, psi);
        min_direct = std::min(min_direct, std::abs(d));
        r.worst_rel = std::max(r.worst_rel, std::abs(ex.evaluate(psi) - d) / std::abs(d));
    }
    r.rel_bound = ex.error_bound / min_direct;
    return r;
}

void suite_heine(VerifyReport& out, Rng& rng) {
    const std::string_view s = "heine";
    const std::array<Complex, 6> mus = {0.5, 1.0, 1.5, 2.0, Complex(0.6, 0.3), -0.5};
    const std::array<Complex, 5> zs = {1.25, 2.0, 5.0, Complex(1.5, 0.8), Complex(-2.0, 0.5)};

    Check rc(out, s, "reconstruction error / (10 error_bound) over the psi grid", 1.0);
    rc.note("error_bound = tail_bound + coefficient err_est + rounding, relative to min |direct|");
    rc.run([&](Check& c) {
        for (Complex mu : mus)
            for (Complex zv : zs) {
                const CutArgument z = CutArgument::validate(zv);
                const TruncatedExpansion ex = expand({mu, z});
                const Reconstruction r = reconstruct(ex, mu, z);
                c.add(r.worst_rel / (10.0 * r.rel_bound));
            }
    });
    Check(out, s, "hypergeometric route = Legendre route for A_{mu,n}", 1e-10).run([&](Check& c) {
        for (int i = 0; i < 200; ++i) {
            const Complex mu = i % 2 == 0 ? Complex(uniform_int(rng, -3, 4) + 0.5) : sample_complex(rng, 2.0) + 0.8;
            const int n = uniform_int(rng, 0, 16);
            const CutArgument z = sample_z(rng);
            const CoefficientEntry h = coefficient(mu, n, z, CoefficientRoute::hypergeometric);
            const CoefficientEntry l = coefficient(mu, n, z, CoefficientRoute::legendre);
            c.add(std::abs(h.value - l.value) / std::max(std::abs(h.value), h.err_est + l.err_est));
        }
    });
    Check(out, s, "mu = 1/2 coefficients equal sqrt(2)/pi Q_{n-1/2}", 4.0 * eps).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const CutArgument z = sample_z(rng);
            const int n = uniform_int(rng, 0, 20);
            const QValue q = q_dispatch(DegreeOrder::make(n - 0.5, 0.0), z);
            c.add(rel(coefficient(0.5, n, z, CoefficientRoute::legendre).value, std::sqrt(2.0) / pi * q.value));
        }
    });
    Check(out, s, "positive powers: coefficients beyond n = q vanish (|A_n|/|A_0|)", 1e-13).run([&](Check& c) {
        for (int q = 0; q <= 6; ++q)
            for (int i = 0; i < 10; ++i) {
                const CutArgument z = sample_z(rng);
                const CoefficientTable t = coefficient_table(-static_cast<double>(q), z, q + 6);
                const double a0 = std::abs(t.entries[0].value);
                for (int n = q + 1; n <= q + 6; ++n)
                    c.add(std::abs(t.entries[static_cast<std::size_t>(n)].value) / a0);
            }
    });
    Check(out, s, "positive_power_expand(q) reproduces (z - cos psi)^q", 1e-10).run([&](Check& c) {
        for (int q = 0; q <= 4; ++q)
            for (int i = 0; i < 6; ++i) {
                const CutArgument z = sample_z(rng);
                const TruncatedExpansion ex = positive_power_expand(q, z);
                for (double psi : psi_grid(37))
                    c.add(rel(ex.evaluate(psi), std::pow(z.value() - std::cos(psi), q)));
            }
    });
    Check(out, s, "parity f(psi) = f(-psi) (mismatches)", 0.0).run([&](Check& c) {
        const TruncatedExpansion ex = expand({Complex(0.6, 0.3), CutArgument::validate(Complex(1.5, 0.8))});
        for (int i = 0; i < 100; ++i) {
            const double psi = uniform(rng, 0.0, pi);
            c.add(ex.evaluate(psi) == ex.evaluate(-psi) ? 0.0 : 1.0);
        }
    });
    Check(out, s, "coefficient ratio over the last quartile vs |z - sqrt(z^2-1)|", 0.2).run([&](Check& c) {
        for (Complex mu : mus)
            for (Complex zv : zs) {
                const CutArgument z = CutArgument::validate(zv);
                const CoefficientTable t = coefficient_table(mu, z, 64);
                const double r = std::abs(sqrt_zsq_minus_one(z).minus);
                for (std::size_t n = 48; n < 64; ++n)
                    c.add(std::abs(std::abs(t.entries[n + 1].value / t.entries[n].value) / r - 1.0));
            }
    });
    Check(out, s, "tail_bound >= |f_N - f_2N| on the psi grid (ratio)", 1.0).run([&](Check& c) {
        for (Complex mu : mus)
            for (Complex zv : zs) {
                const CutArgument z = CutArgument::validate(zv);
                for (int N : {4, 8, 16}) {
                    HeineParameters p{mu, z};
                    p.n_max = N;
                    p.auto_n_max = false;
                    const TruncatedExpansion a = expand(p);
                    p.n_max = 2 * N;
                    const TruncatedExpansion b = expand(p);
                    double diff = 0.0;
                    for (double psi : psi_grid())
                        diff = std::max(diff, std::abs(a.evaluate(psi) - b.evaluate(psi)));
                    c.add(std::max(0.0, diff - b.error_bound) / a.tail_bound);
                }
            }
    });
    Check(out, s, "mu = 1 at z = cosh eta: A_n = e^{-n eta}/sinh eta", 1e-13).run([&](Check& c) {
        for (int i = 0; i < 50; ++i) {
            const double eta = uniform(rng, 0.1, 4.0);
            const int n = uniform_int(rng, 0, 20);
            c.add(rel(coefficient(1.0, n, CutArgument::validate(std::cosh(eta))).value,
                      std::exp(-n * eta) / std::sinh(eta)));
        }
    });
    Check(out, s, "cosh closed forms q = 1..4 vs expand(mu = q)", 1e-10).run([&](Check& c) {
        for (int q = 1; q <= 4; ++q)
            for (double eta : {0.5, 1.0, 2.0}) {
                const CutArgument z = CutArgument::validate(std::cosh(eta));
                const TruncatedExpansion ex = expand({static_cast<double>(q), z});
                for (double psi : psi_grid(37))
                    c.add(rel(cosh_closed_form(q, eta, psi), ex.evaluate(psi)));
            }
    });
    Check(out, s, "odd-half-integer coefficient formula vs general coefficient", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const int q = uniform_int(rng, -3, 4);
            const int n = uniform_int(rng, 0, 10);
            const CutArgument z = CutArgument::validate(uniform(rng, 1.05, 6.0));
            c.add(rel(odd_half_integer_coefficient(q, n, z).value,
                      coefficient(q + 0.5, n, z, CoefficientRoute::hypergeometric).value));
        }
    });
    Check(out, s, "integer power cosh coefficients vs general coefficient", 1e-11).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            const int q = uniform_int(rng, 1, 6);
            const int n = uniform_int(rng, 0, 12);
            const double eta = uniform(rng, 0.2, 3.0);
            c.add(rel(integer_power_coefficient_cosh(q, n, eta),
                      coefficient(static_cast<double>(q), n, CutArgument::validate(std::cosh(eta))).value));
        }
    });
    Check(out, s, "Gauss form (2 r1 r2)^{-mu} (z - cos psi)^{-mu} vs direct", 1e-12).run([&](Check& c) {
        for (int i = 0; i < 100; ++i) {
            // Radii ratio at most 0.7 keeps z >= 1.04, inside the range of the
            // 1/z^2 series.
            double r1 = uniform(rng, 0.1, 5.0);
            double r2 = r1 * uniform(rng, 0.1, 0.7);
            if (i % 2 == 1)
                std::swap(r1, r2);
            const Complex mu = sample_complex(rng, 1.5) + 1.0;
            const double psi = uniform(rng, -pi, pi);
            const GaussArgument g = gauss_z(r1, r2);
            const Complex lhs = std::exp(-mu * std::log(r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(psi)));
            c.add(rel(std::exp(-mu * std::log(g.scale)) * direct_value(mu, g.z, psi), lhs));
            const int n = uniform_int(rng, 0, 6);
            const Complex viaz = std::exp(-mu * std::log(g.scale)) * coefficient(mu, n, g.z).value;
            c.add(rel(gauss_coefficient(mu, n, r1, r2), viaz));
        }
    });
}

void suite_oracle_cross(VerifyReport& out, Rng& rng) {
    const std::string_view s = "oracle-cross";
    const std::array<Complex, 6> mus = {0.5, 1.0, 1.5, 2.0, Complex(0.6, 0.3), -0.5};
    const std::array<Complex, 5> zs = {1.25, 2.0, 5.0, Complex(1.5, 0.8), Complex(-2.0, 0.5)};

    Check(out, s, "coefficient vs Fourier-integral quadrature, n <= 10 (|diff|/|A_0|)", 1e-9).run([&](Check& c) {
        for (Complex mu : mus)
            for (Complex zv : zs) {
                const CutArgument z = CutArgument::validate(zv);
                const double a0 = std::abs(coefficient(mu, 0, z).value);
                for (int n = 0; n <= 10; ++n) {
                    const auto q = oracle::fourier_integral_quadrature(mu, n, z, 1e-14 * a0);
                    c.add(std::abs(coefficient(mu, n, z).value - q.value) / a0);
                }
            }
    });
    Check(out, s, "quadrature at doubled tol within the coarse abs_err_est (ratio)", 1.0).run([&](Check& c) {
        for (int i = 0; i < 30; ++i) {
            const Complex mu = sample_complex(rng, 1.5) + 1.0;
            const CutArgument z = sample_z(rng);
            const int n = uniform_int(rng, 0, 12);
            const double tol = 1e-8;
            const auto fine = oracle::fourier_integral_quadrature(mu, n, z, tol);
            const auto coarse = oracle::fourier_integral_quadrature(mu, n, z, 2.0 * tol);
            c.add(std::abs(fine.value - coarse.value) / std::max(coarse.abs_err_est, fine.abs_err_est));
        }
    });
    Check(out, s, "double sum vs identity route", 1e-9).run([&](Check& c) {
        for (Complex mu : mus)
            for (Complex zv : zs) {
                const CutArgument z = CutArgument::validate(zv);
                const TruncatedExpansion ex = expand({mu, z});
                const int K = static_cast<int>(std::ceil(40.0 / std::log10(std::abs(zv)))) + 40;
                for (int i = 0; i < 3; ++i) {
                    const double psi = uniform(rng, 0.0, pi);
                    const Complex d = oracle::brute_force_double_sum(mu, z, psi, K);
                    c.add(std::abs(d - ex.evaluate(psi)) / std::max(1.0, std::abs(d)));
                }
            }
    });
    Check(out, s, "Chebyshev generating function check (failures)", 0.0).run([&](Check& c) {
        for (int i = 0; i < 20; ++i)
            c.add(oracle::chebyshev_generating_check(uniform(rng, 0.05, 5.0), uniform(rng, -pi, pi), 100000) ? 0.0
                                                                                                            : 1.0);
    });
    Check(out, s, "definite integral vs quadrature over [-pi, pi]", 1e-9).run([&](Check& c) {
        for (int i = 0; i < 30; ++i) {
            const Complex mu = sample_complex(rng, 1.5) + 1.0;
            const CutArgument z = sample_z(rng);
            const int n = uniform_int(rng, 0, 8);
            const Complex ref = 2.0 * pi * oracle::fourier_integral_quadrature(mu, n, z, 1e-13).value;
            c.add(std::abs(definite_integral(mu, n, z) - ref) / std::abs(definite_integral(mu, 0, z)));
        }
    });
}

using SuiteFn = void (*)(VerifyReport&, Rng&);

constexpr std::array<SuiteFn, 7> suite_fns = {suite_scalars, suite_branch,  suite_hyp,         suite_elliptic,
                                              suite_legendre, suite_heine, suite_oracle_cross};

} // namespace

bool VerifyReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyReport& p) { return p.passed; });
}

std::span<const std::string_view> verify_suites() { return suites; }

VerifyReport run_verify(std::string_view suite, std::uint64_t seed) {
    VerifyReport report;
    bool found = false;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        if (suite != "all" && suite != suites[i])
            continue;
        found = true;
        // Each suite draws from its own stream so results do not depend on
        // which other suites ran.
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        suite_fns[i](report, rng);
    }
    if (!found)
        throw DomainError("unknown suite '" + std::string(suite) + "'");
    return report;
}

} // namespace heine

#include "heine/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace heine::oracle {

namespace {
constexpr double pi = std::numbers::pi;
}

QuadratureResult fourier_integral_quadrature(Complex mu, int n, const CutArgument& z, double tol) {
    const Complex zv = z.value();
    auto integrand = [&](double psi) -> Complex {
        const Complex base = mu == Complex(0.0) ? Complex(1.0) : std::exp(-mu * std::log(zv - std::cos(psi)));
        return std::cos(n * psi) * base / pi;
    };
    return integrate(integrand, 0.0, pi, tol);
}

Complex brute_force_double_sum(Complex mu, const CutArgument& z, double psi, int K) {
    const Complex zv = z.value();
    Complex c = std::exp(-mu * std::log(zv)); // (mu)_k/k! z^{-mu-k}
    std::vector<double> row{1.0};             // C(k, j) / 2^k
    Complex total = 0.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            std::vector<double> next(row.size() + 1);
            next.front() = 0.5 * row.front();
            next.back() = 0.5 * row.back();
            for (std::size_t j = 1; j < row.size(); ++j)
                next[j] = 0.5 * (row[j - 1] + row[j]);
            row = std::move(next);
            c *= (mu + (k - 1.0)) / (static_cast<double>(k) * zv);
        }
        double inner = 0.0;
        for (int j = 0; j <= k; ++j)
            inner += row[j] * std::cos((2.0 * j - k) * psi);
        total += c * inner;
    }
    return total;
}

ChebyshevSum chebyshev_generating_sum(double eta, double psi, int K) {
    const double t = std::exp(-eta);
    const double x = std::cos(psi);
    double t_prev = 1.0; // T_0
    double t_cur = x;    // T_1
    double sum = 1.0;
    double tn = 1.0;
    int terms = 1;
    for (int n = 1; n < K; ++n) {
        tn *= t;
        sum += 2.0 * tn * t_cur;
        ++terms;
        if (2.0 * tn < 1e-17 * std::abs(sum))
            break;
        const double t_next = 2.0 * x * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return {sum, terms};
}

bool chebyshev_generating_check(double eta, double psi, int K) {
    if (!(eta > 0.0))
        throw DomainError("chebyshev_generating_check requires eta > 0");
    const double lhs = chebyshev_generating_sum(eta, psi, K).value / std::sinh(eta);
    const double rhs = 1.0 / (std::cosh(eta) - std::cos(psi));
    return std::abs(lhs - rhs) <= 1e-11 * std::abs(rhs);
}

} // namespace heine::oracle

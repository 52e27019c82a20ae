#ifndef HEINE_ORACLE_HPP
#define HEINE_ORACLE_HPP

#include <cstddef>

#include "heine/branch.hpp"
#include "heine/types.hpp"

// Independent reference values. Nothing here calls into the Legendre or
// hypergeometric code; only the branch conventions are shared.
namespace heine::oracle {

struct QuadratureResult {
    Complex value;
    double abs_err_est = 0.0;
    std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a complex integrand
/// on [a, b]. The requested tol is floored at 100 eps times the integral
/// of |f|. Throws QuadratureStall past 2^16 panels.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double tol);

/// (1/pi) int_0^pi cos(n psi) (z - cos psi)^(-mu) d psi, i.e. A_{mu,n}(z)
/// without the Neumann factor.
QuadratureResult fourier_integral_quadrature(Complex mu, int n, const CutArgument& z, double tol);

/// Partial sum of the binomial/cosine-power double series
///   sum_{k=0}^{K} sum_{j=0}^{k} (mu)_k/k! 2^{-k} z^{-mu-k} C(k,j) cos((2j-k) psi).
Complex brute_force_double_sum(Complex mu, const CutArgument& z, double psi, int K);

struct ChebyshevSum {
    double value;  ///< sum eps_n t^n T_n(cos psi), t = e^{-eta}
    int terms;
};

/// Chebyshev generating series with T_n from its three-term recurrence;
/// stops once 2 t^n < 1e-17 |sum| or after K terms.
ChebyshevSum chebyshev_generating_sum(double eta, double psi, int K);

/// sum / sinh(eta) == 1/(cosh(eta) - cos(psi)) to 1e-11 relative.
bool chebyshev_generating_check(double eta, double psi, int K);

} // namespace heine::oracle

#include "heine/oracle_impl.hpp"

#endif

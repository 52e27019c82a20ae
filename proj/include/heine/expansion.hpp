#ifndef HEINE_EXPANSION_HPP
#define HEINE_EXPANSION_HPP

#include <string_view>
#include <vector>

#include "heine/branch.hpp"
#include "heine/legendre_q.hpp"
#include "heine/types.hpp"

namespace heine {

// Fourier expansion of the binomial (z - cos psi)^(-mu):
//
//   (z - cos psi)^(-mu) = sum_{n >= 0} eps_n A_{mu,n}(z) cos(n psi),
//
//   A_{mu,n}(z) = (mu)_n / (2^n n! z^(mu+n)) 2F1((mu+n)/2, (mu+n+1)/2; n+1; 1/z^2)
//              = sqrt(2/pi) e^{-i pi (mu - 1/2)} (z^2-1)^{1/4 - mu/2} / Gamma(mu)
//                * Q_{n-1/2}^{mu-1/2}(z).
//
// Coefficients never include the Neumann factor eps_n; it is applied when
// the series is summed.

inline constexpr std::string_view coefficient_convention = "excludes_neumann_factor";

enum class CoefficientRoute {
    automatic,      ///< Legendre route, hypergeometric on a gamma pole
    hypergeometric, ///< first line: series in 1/z^2
    legendre,       ///< second line: Q through q_dispatch
};

struct CoefficientEntry {
    Complex value;
    Backend backend = Backend::hyp;
    double err_est = 0.0;
};

struct CoefficientTable {
    Complex mu;
    Complex z;
    std::vector<CoefficientEntry> entries; ///< index n = 0 .. n_max
    std::string_view convention = coefficient_convention;
};

struct HeineParameters {
    Complex mu;
    CutArgument z;
    int n_max = 32;           ///< fixed order, or starting order in auto mode
    double tol = 1e-13;       ///< auto mode target, relative to min |f| on a coarse grid
    bool auto_n_max = true;
    int n_cap = 4096;
    unsigned threads = 1;
    CoefficientRoute route = CoefficientRoute::automatic;
};

struct TruncatedExpansion {
    CoefficientTable table;
    double decay_ratio = 0.0; ///< |z - sqrt(z^2-1)|
    double tail_bound = 0.0;  ///< geometric estimate of the omitted modes, absolute
    double error_bound = 0.0; ///< tail_bound + coefficient errors + rounding, absolute

    int n_max() const { return static_cast<int>(table.entries.size()) - 1; }

    /// sum_{n=0}^{n_max} eps_n A_n cos(n psi)
    Complex evaluate(double psi) const;
};

/// (z - cos psi)^(-mu) with the principal power.
Complex direct_value(Complex mu, const CutArgument& z, double psi);

CoefficientEntry coefficient(Complex mu, int n, const CutArgument& z,
                             CoefficientRoute route = CoefficientRoute::automatic);

/// Entries n = 0..n_max, computed on up to `threads` workers.
CoefficientTable coefficient_table(Complex mu, const CutArgument& z, int n_max,
                                   CoefficientRoute route = CoefficientRoute::automatic, unsigned threads = 1);

/// Geometric tail estimate 2 (|A_N| + err_N) rho/(1 - rho), with rho the
/// larger of |z - sqrt(z^2-1)| and the last observed coefficient ratios.
double geometric_tail(const std::vector<CoefficientEntry>& entries, double decay_ratio);

/// Builds the truncated series. In auto mode n_max grows until the tail
/// drops below tol * min|f|, then is trimmed to the smallest such order.
/// Throws NoConvergence past n_cap.
TruncatedExpansion expand(const HeineParameters& p);

/// (z - cos psi)^q for integer q >= 0: exactly q + 1 coefficients, through
///   A_{-q,n} = -i sqrt(2/pi) (-1)^q (z^2-1)^{q/2+1/4} (-q)_n/(q+n)! Q_{n-1/2}^{q+1/2}(z).
TruncatedExpansion positive_power_expand(int q, const CutArgument& z);

/// A_{q+1/2,n}(z) = 2^{q+1/2} (-1)^q / (pi (2q-1)!! (z^2-1)^{q/2}) Q_{n-1/2}^q(z).
CoefficientEntry odd_half_integer_coefficient(int q, int n, const CutArgument& z);

/// Closed forms of (cosh eta - cos psi)^(-q), q = 1..4, as explicit
/// sums over e^{-n eta} summed to machine precision.
double cosh_closed_form(int q, double eta, double psi);

/// A_{q,n}(cosh eta) for integer q >= 1 as a q-term finite sum.
double integer_power_coefficient_cosh(int q, int n, double eta);

/// int_{-pi}^{pi} cos(n t) (z - cos t)^(-mu) dt.
Complex definite_integral(Complex mu, int n, const CutArgument& z);

/// Maps [r1^2 + r2^2 - 2 r1 r2 cos psi]^(-mu) onto the binomial form:
/// it equals scale^(-mu) (z - cos psi)^(-mu) with z = (r1^2+r2^2)/(2 r1 r2),
/// scale = 2 r1 r2.
struct GaussArgument {
    CutArgument z;
    double scale;
};

GaussArgument gauss_z(double r1, double r2);

/// (mu)_n/n! r_<^n / r_>^(2mu+n) 2F1(n+mu, mu; n+1; r_<^2/r_>^2), the cos(n psi)
/// coefficient (without eps_n) of [r1^2 + r2^2 - 2 r1 r2 cos psi]^(-mu).
Complex gauss_coefficient(Complex mu, int n, double r1, double r2);

/// Uniform grid of `points` angles on [0, pi].
std::vector<double> psi_grid(int points = 181);

} // namespace heine

#endif

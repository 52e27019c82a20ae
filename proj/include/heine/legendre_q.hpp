#ifndef HEINE_LEGENDRE_Q_HPP
#define HEINE_LEGENDRE_Q_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "heine/branch.hpp"
#include "heine/hyp2f1.hpp"
#include "heine/types.hpp"

namespace heine {

/// Evaluation routes for Q_degree^order(z).
enum class Backend {
    hyp,          ///< Gauss hypergeometric series in 1/z^2
    closed_form,  ///< finite sum for half-integer order
    elliptic_rec, ///< K/E seeds + degree and order recurrences (real z, integer order)
    order_rec,    ///< order +-1/2 seeds + upward order recurrence
};

std::string_view to_string(Backend b);
std::optional<Backend> backend_from_string(std::string_view s);

/// Degree and order of Q_degree^order, with the integrality flags every
/// backend keys on. Values within 1e-12 of a flagged lattice point are
/// snapped onto it.
struct DegreeOrder {
    Complex degree;
    Complex order;
    bool half_integer_degree = false; ///< degree = n - 1/2
    bool half_integer_order = false;  ///< order = q - 1/2
    bool integer_order = false;       ///< order = q
    int degree_index = 0;             ///< n, when half_integer_degree
    int order_index = 0;              ///< q, when half_integer_order or integer_order

    static DegreeOrder make(Complex degree, Complex order);

    /// Same order, degree n - 1/2 replaced by |n| - 1/2.
    DegreeOrder canonical() const;
};

struct QValue {
    Complex value;
    Backend backend = Backend::hyp;
    double err_est = 0.0;
    bool conditioning_warning = false; ///< |z - 1| < 1e-6
};

/// Q_nu^mu via the hypergeometric representation, with
/// a = nu + 1/2, b = mu + 1/2:
///   Q = sqrt(pi/2) Gamma(a+b)/Gamma(a+1) e^{i pi mu} (z^2-1)^{mu/2}
///       (2^a z^{a+b})^{-1} 2F1((a+b)/2, (a+b+1)/2; a+1; 1/z^2).
/// No degree canonicalization; poles of Gamma(a+1) are handled through the
/// regularized series. Throws PoleError when Gamma(nu + mu + 1) has a pole.
QValue q_via_hypergeometric(const DegreeOrder& dq, const CutArgument& z, const SeriesOptions& opts = {});

/// Q_nu^{1/2}(z) = i sqrt(pi/2) (z^2-1)^{-1/4} (z + sqrt(z^2-1))^{-nu-1/2}.
QValue q_half_order_plus(Complex nu, const CutArgument& z);

/// Q_nu^{-1/2}(z) = -i sqrt(2 pi)/(2 nu + 1) (z^2-1)^{-1/4} (z + sqrt(z^2-1))^{-nu-1/2}.
QValue q_half_order_minus(Complex nu, const CutArgument& z);

/// Q_nu^{q-1/2}(z) as a finite sum of max(q, 1-q) terms.
QValue q_half_integer_order_closed_form(Complex nu, int q, const CutArgument& z);

/// Q_{m-1/2}^1(z) for real z > 1 from E and K seeds and the unit-order
/// degree recurrence. Throws DomainError for complex z.
QValue q_unit_order_elliptic(int m, const CutArgument& z);

/// Q_{n-1/2}^{order}(z) for integer order and real z > 1: order-0 and
/// order-1 elliptic seeds, degree recurrence to n, then order recurrence.
QValue q_integer_order_elliptic(int n, int order, const CutArgument& z);

/// One step of the order recurrence: Q_nu^{mu+2} from Q_nu^mu and Q_nu^{mu+1}.
/// dq holds (nu, mu).
QValue q_order_recurrence_step(const DegreeOrder& dq, const CutArgument& z, const QValue& q_mu,
                               const QValue& q_mu_plus_1);

/// Q_nu^{q-1/2}(z), q >= 0, by stepping the order recurrence up from the
/// order -1/2 and +1/2 seeds.
QValue q_via_order_recurrence(Complex nu, int q, const CutArgument& z);

/// Q_{p-1/2}^{-n-1/2}(z) = -Gamma(p-n)/Gamma(p+n+1) Q_{p-1/2}^{n+1/2}(z).
/// p is canonicalized to |p|. Throws PoleError when p - n <= 0.
QValue negative_order_relation(int p, int n, const CutArgument& z);

/// Checks Q_{-n-1/2}^mu(z) = Q_{n-1/2}^mu(z) to 1e-11 relative. For orders
/// that are not half-integers the left side is evaluated at the raw negative
/// degree through the regularized series. At half-integer order the raw
/// analytic values differ; both sides then go through the canonicalizing
/// dispatcher.
bool negative_degree_symmetry(int n, Complex mu, const CutArgument& z);

/// Relative-error amplification of the forward degree recurrence,
/// |z + sqrt(z^2-1)|^{2n}.
double degree_recurrence_amplification(int n, const CutArgument& z);

struct DispatchRule {
    std::string_view name;
    std::string_view condition;
    Backend backend;
    bool (*matches)(const DegreeOrder&, const CutArgument&);
};

/// Ordered rule list; the first match wins.
std::span<const DispatchRule> dispatch_table();

/// Backends able to evaluate (dq, z) without a structural precondition failing.
std::vector<Backend> applicable_backends(const DegreeOrder& dq, const CutArgument& z);

/// Evaluates Q after canonicalizing the degree. With force unset the
/// dispatch table picks the backend.
QValue q_dispatch(const DegreeOrder& dq, const CutArgument& z, std::optional<Backend> force = std::nullopt);

} // namespace heine

#endif

#ifndef HEINE_BRANCH_HPP
#define HEINE_BRANCH_HPP

#include "heine/types.hpp"

namespace heine {

/// A point of the cut plane C \ (-inf, 1] with |z| > 1.
///
/// Every fractional power of z^2 - 1 in the library is taken through this
/// type so the discontinuity stays on (-inf, 1]; see sqrt_zsq_minus_one().
class CutArgument {
public:
    /// Throws DomainError naming the violated constraint.
    static CutArgument validate(Complex z);

    Complex value() const { return z_; }
    bool is_real() const { return z_.imag() == 0.0; }

private:
    explicit CutArgument(Complex z) : z_(z) {}
    Complex z_;
};

/// sqrt(z^2 - 1) together with the two Joukowski branches z -/+ sqrt(z^2 - 1).
struct SqrtBranch {
    Complex root;  ///< sqrt(z-1) * sqrt(z+1)
    Complex plus;  ///< z + root, |plus| > 1
    Complex minus; ///< z - root = 1/plus, |minus| < 1
};

/// sqrt(z-1)*sqrt(z+1) with principal roots: positive for real z > 1, cut on
/// (-inf, 1]. The small branch is formed as 1/(z + root) to avoid cancellation.
SqrtBranch sqrt_zsq_minus_one(const CutArgument& z);

/// log(z-1) + log(z+1) with principal logs.
Complex log_zsq_minus_one(const CutArgument& z);

/// (z^2 - 1)^p := exp(p * (log(z-1) + log(z+1))).
Complex cut_power(const CutArgument& z, Complex p);

/// Probe for arg(z - cos psi) = arg(z) + arg(1 - cos(psi)/z), to 1e-12.
bool arg_decomposition_holds(const CutArgument& z, double psi);

} // namespace heine

#endif

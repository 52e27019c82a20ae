#ifndef HEINE_ELLIPTIC_HPP
#define HEINE_ELLIPTIC_HPP

namespace heine {

// Complete elliptic integrals in the modulus convention:
//   K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt,
//   E(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{1/2} dt.
// Both require 0 <= k < 1 and throw ModulusRange otherwise.

double elliptic_k(double k);
double elliptic_e(double k);

struct EllipticPair {
    double k;
    double e;
};

/// K and E together, taking k' = sqrt(1 - k^2) from the caller so that
/// moduli near 1 do not lose digits forming 1 - k^2.
EllipticPair elliptic_ke(double k, double k_complement);

} // namespace heine

#endif

#ifndef HEINE_SCALAR_HPP
#define HEINE_SCALAR_HPP

#include <cstdint>

#include "heine/types.hpp"

namespace heine {

/// True when z is exactly one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z);

/// Principal Gamma function. Lanczos approximation (g = 7, nine coefficients)
/// with reflection for Re z < 1/2. Throws PoleError on 0, -1, -2, ...
Complex gamma(Complex z);

/// 1/Gamma(z); entire, returns exactly zero on the poles of Gamma.
Complex rgamma(Complex z);

/// log Gamma(z) on some branch. Only meaningful after exponentiation.
Complex log_gamma(Complex z);

/// Gamma(a)/Gamma(b) for arguments where either Gamma alone would overflow.
Complex gamma_ratio(Complex a, Complex b);

/// Rising factorial (z)_n by direct product.
Complex pochhammer_rising(Complex z, unsigned n);

/// Falling factorial [z]_n by direct product.
Complex pochhammer_falling(Complex z, unsigned n);

/// Generalized binomial coefficient [z]_k / k!.
Complex binomial(Complex z, unsigned k);

/// Exact binomial coefficient for 0 <= l <= 62; zero when m > l.
std::uint64_t binomial_exact(unsigned l, unsigned m);

/// m!! for odd m (any sign) and non-negative even m.
/// (-2q-1)!! = (-1)^q 2^q q! / (2q)! for the negative odd branch.
double double_factorial(int m);

/// e^{i pi t}, exact on multiples of 1/2.
Complex exp_i_pi(Complex t);

/// epsilon_n = 2 - delta_{n,0}.
int neumann_factor(int n);

} // namespace heine

#endif

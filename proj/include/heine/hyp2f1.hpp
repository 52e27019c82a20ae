#ifndef HEINE_HYP2F1_HPP
#define HEINE_HYP2F1_HPP

#include <cstddef>
#include <utility>

#include "heine/types.hpp"

namespace heine {

/// Parameters of 2F1(a, b; c; x).
struct HypParams {
    Complex a;
    Complex b;
    Complex c;
    Complex x;
};

struct SeriesOptions {
    double tol = 1e-14;          ///< relative stopping tolerance
    std::size_t max_terms = 10000;
};

struct SeriesResult {
    Complex value;
    double err_est = 0.0; ///< estimated |truncation| + rounding, absolute
    std::size_t terms = 0;
};

/// Gauss hypergeometric power series.
///
/// Sums until three consecutive terms fall below tol * |partial sum|. When a
/// or b is a non-positive integer -m the series is a polynomial and exactly
/// m + 1 terms are summed (for any x). Otherwise |x| < 1 is required; there is
/// no analytic continuation, callers transform the argument first.
///
/// Throws PoleError when c is a non-positive integer, NoConvergence past
/// max_terms, DomainError for |x| >= 1 on a non-terminating series.
SeriesResult gauss_2f1(const HypParams& p, const SeriesOptions& opts = {});

/// 2F1(a, b; c; x) / Gamma(c), finite for every c.
SeriesResult gauss_2f1_regularized(const HypParams& p, const SeriesOptions& opts = {});

/// Pfaff form: 2F1(a,b;c;x) = prefactor * 2F1(a, c-b; c; x/(x-1)),
/// prefactor = (1-x)^(-a).
struct PfaffForm {
    HypParams params;
    Complex prefactor;
};

PfaffForm pfaff_transform(const HypParams& p);

/// Both sides of the quadratic transformation
///   2F1(a, b; a-b+1; x^2) = (1+x^2)^(-a) 2F1(a/2, (a+1)/2; a-b+1; 4x^2/(1+x^2)^2).
std::pair<Complex, Complex> quadratic_transform_sides(Complex a, Complex b, Complex x);

/// True when the two sides agree to 1e-10 relative.
bool quadratic_transform_check(Complex a, Complex b, Complex x);

} // namespace heine

#endif

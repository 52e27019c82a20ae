#ifndef HEINE_TESTS_SUPPORT_HPP
#define HEINE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>

namespace heine::test {

inline double rel_err(std::complex<double> a, std::complex<double> b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

} // namespace heine::test

#endif

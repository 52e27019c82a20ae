#include "heine/branch.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace heine {

CutArgument CutArgument::validate(Complex z) {
    std::ostringstream where;
    where.precision(17);
    where << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    if (!is_finite(z))
        throw DomainError(where.str() + " is not finite");
    if (z.imag() == 0.0 && z.real() <= 1.0)
        throw DomainError(where.str() + " lies on the branch cut (-inf, 1]");
    if (!(std::abs(z) > 1.0))
        throw DomainError(where.str() + " violates |z| > 1");
    return CutArgument(z);
}

SqrtBranch sqrt_zsq_minus_one(const CutArgument& z) {
    const Complex zv = z.value();
    Complex root = std::sqrt(zv - 1.0) * std::sqrt(zv + 1.0);
    if (z.is_real())
        root = Complex(root.real(), 0.0);
    const Complex plus = zv + root;
    return {root, plus, 1.0 / plus};
}

Complex log_zsq_minus_one(const CutArgument& z) {
    return std::log(z.value() - 1.0) + std::log(z.value() + 1.0);
}

Complex cut_power(const CutArgument& z, Complex p) {
    if (p == Complex(0.0))
        return 1.0;
    Complex r = std::exp(p * log_zsq_minus_one(z));
    if (z.is_real() && p.imag() == 0.0)
        r = Complex(r.real(), 0.0);
    return r;
}

bool arg_decomposition_holds(const CutArgument& z, double psi) {
    const Complex zv = z.value();
    const double c = std::cos(psi);
    const double lhs = std::arg(zv - c);
    const double rhs = std::arg(zv) + std::arg(1.0 - c / zv);
    return std::abs(lhs - rhs) <= 1e-12;
}

} // namespace heine

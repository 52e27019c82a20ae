#ifndef HEINE_TYPES_HPP
#define HEINE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace heine {

using Complex = std::complex<double>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument sits on a gamma-function pole (also used for hypergeometric
/// parameter poles, where c is a non-positive integer).
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error("gamma pole: " + what) {}
};

/// Argument outside the cut domain or outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class ModulusRange : public DomainError {
public:
    using DomainError::DomainError;
};

class EvenNegativeError : public DomainError {
public:
    using DomainError::DomainError;
};

class NegativeModeError : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateError : public DomainError {
public:
    using DomainError::DomainError;
};

class QuadratureStall : public Error {
public:
    using Error::Error;
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace heine

#endif

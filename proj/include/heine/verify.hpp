#ifndef HEINE_VERIFY_HPP
#define HEINE_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heine {

/// Outcome of one checked property: the worst deviation seen over all
/// samples against the property's threshold.
struct PropertyReport {
    std::string suite;
    std::string name;
    std::size_t samples = 0;
    double worst = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string note;
};

struct VerifyReport {
    std::vector<PropertyReport> properties;
    bool passed() const;
};

/// scalars, branch, hyp, elliptic, legendre, heine, oracle-cross
std::span<const std::string_view> verify_suites();

/// Runs one suite, or every suite for "all". Deterministic for a given seed.
/// Throws DomainError for an unknown suite name.
VerifyReport run_verify(std::string_view suite, std::uint64_t seed);

} // namespace heine

#endif

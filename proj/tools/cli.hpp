#ifndef HEINE_TOOLS_CLI_HPP
#define HEINE_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heine/types.hpp"

namespace heine::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_bound_violated = 3,
};

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i". Whitespace is not allowed
/// inside the literal. Returns nullopt on anything else.
std::optional<Complex> parse_complex(std::string_view s);

/// Parses a real number, also accepting "pi", "-pi", "k*pi" and "pi/k".
std::optional<double> parse_real_with_pi(std::string_view s);

/// "start:stop:count" with count >= 2; endpoints may use pi.
std::optional<std::vector<double>> parse_grid(std::string_view s);

/// Worker count: the flag when given, else HEINE_THREADS, else the
/// hardware concurrency.
unsigned resolve_threads(std::optional<unsigned> flag);

/// Runs the command line (args excludes the program name). Normal output
/// goes to out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace heine::cli

#endif

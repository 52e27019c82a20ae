#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "heine/branch.hpp"
#include "heine/expansion.hpp"
#include "heine/legendre_q.hpp"
#include "heine/verify.hpp"

namespace heine::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double pi = std::numbers::pi;

std::optional<double> parse_double(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    if (s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::string num17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON writer that prints every double with 17 significant digits.
void write_json(std::ostream& os, const ordered_json& j) {
    switch (j.type()) {
    case ordered_json::value_t::object: {
        os << '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first)
                os << ',';
            first = false;
            os << ordered_json(k).dump() << ':';
            write_json(os, v);
        }
        os << '}';
        break;
    }
    case ordered_json::value_t::array: {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                os << ',';
            write_json(os, j[i]);
        }
        os << ']';
        break;
    }
    case ordered_json::value_t::number_float: os << num17(j.get<double>()); break;
    default: os << j.dump();
    }
}

void emit(std::ostream& os, const ordered_json& j) {
    write_json(os, j);
    os << '\n';
}

ordered_json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex require_complex(const std::string& flag, const std::string& s) {
    const auto v = parse_complex(s);
    if (!v)
        throw UsageError(flag + ": cannot parse complex literal '" + s + "' (expected a+bi, a-bi, a or bi)");
    return *v;
}

// Output sink: stdout, or a file when --out is given.
class Sink {
public:
    Sink(std::ostream& fallback, const std::string& path) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("--out: cannot open '" + path + "' for writing");
            os_ = &file_;
        }
    }
    std::ostream& os() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

struct CoeffArgs {
    std::string mu, z, format = "json", out;
    std::optional<int> nmax;
    double tol = 1e-13;
    std::optional<unsigned> threads;
};

int cmd_coeff(const CoeffArgs& a, std::ostream& stdout_) {
    const auto t0 = Clock::now();
    const Complex mu = require_complex("--mu", a.mu);
    const CutArgument z = CutArgument::validate(require_complex("--z", a.z));
    if (a.nmax && *a.nmax < 0)
        throw UsageError("--nmax must be >= 0");
    if (!(a.tol > 0.0))
        throw UsageError("--tol must be > 0");
    const unsigned threads = resolve_threads(a.threads);

    CoefficientTable table;
    if (a.nmax) {
        table = coefficient_table(mu, z, *a.nmax, CoefficientRoute::automatic, threads);
    } else {
        HeineParameters p{mu, z};
        p.tol = a.tol;
        p.threads = threads;
        table = expand(p).table;
    }

    Sink sink(stdout_, a.out);
    std::ostream& os = sink.os();
    if (a.format == "csv") {
        os << "# convention=" << table.convention << " mu=" << num17(mu.real()) << ',' << num17(mu.imag())
           << " z=" << num17(z.value().real()) << ',' << num17(z.value().imag()) << '\n';
        os << "n,re,im,backend,err_est\n";
        for (std::size_t n = 0; n < table.entries.size(); ++n) {
            const CoefficientEntry& e = table.entries[n];
            os << n << ',' << num17(e.value.real()) << ',' << num17(e.value.imag()) << ',' << to_string(e.backend)
               << ',' << num17(e.err_est) << '\n';
        }
        return exit_ok;
    }

    emit(os, {{"record", "header"},
              {"command", "coeff"},
              {"params",
               {{"mu", complex_json(mu)},
                {"z", complex_json(z.value())},
                {"nmax", a.nmax ? ordered_json(*a.nmax) : ordered_json("auto")},
                {"tol", a.tol}}},
              {"convention", table.convention}});
    for (std::size_t n = 0; n < table.entries.size(); ++n) {
        const CoefficientEntry& e = table.entries[n];
        emit(os, {{"record", "entry"},
                  {"n", n},
                  {"re", e.value.real()},
                  {"im", e.value.imag()},
                  {"backend", to_string(e.backend)},
                  {"err_est", e.err_est}});
    }
    emit(os, {{"record", "summary"}, {"entries", table.entries.size()}, {"wall_time", seconds_since(t0)}});
    return exit_ok;
}

struct LegendreArgs {
    std::string nu, order, z, backend = "auto", format = "json", out;
    bool dump_dispatch = false;
};

ordered_json qvalue_json(const QValue& v) {
    return {{"backend", to_string(v.backend)},
            {"re", v.value.real()},
            {"im", v.value.imag()},
            {"err_est", v.err_est},
            {"conditioning_warning", v.conditioning_warning}};
}

int cmd_legendre(const LegendreArgs& a, std::ostream& stdout_) {
    const auto t0 = Clock::now();
    Sink sink(stdout_, a.out);
    std::ostream& os = sink.os();

    if (a.dump_dispatch) {
        int order = 0;
        for (const DispatchRule& r : dispatch_table())
            emit(os, {{"record", "dispatch_rule"},
                      {"order", order++},
                      {"name", r.name},
                      {"condition", r.condition},
                      {"backend", to_string(r.backend)}});
        if (a.nu.empty() && a.order.empty() && a.z.empty())
            return exit_ok;
    }
    if (a.nu.empty() || a.order.empty() || a.z.empty())
        throw UsageError("legendre requires --nu, --order and --z");

    const Complex nu = require_complex("--nu", a.nu);
    const Complex mu = require_complex("--order", a.order);
    const CutArgument z = CutArgument::validate(require_complex("--z", a.z));
    const DegreeOrder dq = DegreeOrder::make(nu, mu);
    const ordered_json params = {
        {"nu", complex_json(nu)}, {"order", complex_json(mu)}, {"z", complex_json(z.value())}};

    std::vector<std::pair<Backend, QValue>> results;
    if (a.backend == "all") {
        for (Backend b : applicable_backends(dq, z)) {
            try {
                results.emplace_back(b, q_dispatch(dq, z, b));
            } catch (const PoleError& e) {
                ordered_json rec = {{"record", "legendre"}, {"command", "legendre"}, {"params", params}};
                rec["backend"] = to_string(b);
                rec["error"] = e.what();
                emit(os, rec);
            }
        }
        if (results.empty())
            throw PoleError("no applicable backend could evaluate " + a.nu + ", " + a.order);
    } else {
        std::optional<Backend> force;
        if (a.backend != "auto") {
            force = backend_from_string(a.backend);
            if (!force)
                throw UsageError("--backend: unknown backend '" + a.backend + "'");
        }
        const QValue v = q_dispatch(dq, z, force);
        results.emplace_back(v.backend, v);
    }

    for (const auto& [b, v] : results) {
        ordered_json rec = {{"record", "legendre"}, {"command", "legendre"}, {"params", params}};
        rec.update(qvalue_json(v));
        if (a.format == "csv")
            os << to_string(b) << ',' << num17(v.value.real()) << ',' << num17(v.value.imag()) << ','
               << num17(v.err_est) << '\n';
        else
            emit(os, rec);
    }
    if (a.backend == "all") {
        double dev = 0.0;
        double rel = 0.0;
        for (std::size_t i = 0; i < results.size(); ++i)
            for (std::size_t j = i + 1; j < results.size(); ++j) {
                const double d = std::abs(results[i].second.value - results[j].second.value);
                dev = std::max(dev, d);
                const double s = std::max(std::abs(results[i].second.value), std::abs(results[j].second.value));
                rel = std::max(rel, s > 0.0 ? d / s : 0.0);
            }
        emit(os, {{"record", "deviation"},
                  {"backends", results.size()},
                  {"max_pairwise_deviation", dev},
                  {"max_relative_deviation", rel},
                  {"wall_time", seconds_since(t0)}});
    }
    return exit_ok;
}

struct ReconstructArgs {
    std::string mu, z, grid = "0:pi:181", format = "json", out;
    double tol = 1e-13;
    std::optional<int> nmax;
    std::optional<unsigned> threads;
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& stdout_) {
    const auto t0 = Clock::now();
    const auto grid = parse_grid(a.grid);
    if (!grid)
        throw UsageError("--grid: expected start:stop:count with count >= 2, got '" + a.grid + "'");
    const Complex mu = require_complex("--mu", a.mu);
    const CutArgument z = CutArgument::validate(require_complex("--z", a.z));
    if (!(a.tol > 0.0))
        throw UsageError("--tol must be > 0");

    HeineParameters p{mu, z};
    p.tol = a.tol;
    p.threads = resolve_threads(a.threads);
    if (a.nmax) {
        if (*a.nmax < 0)
            throw UsageError("--nmax must be >= 0");
        p.n_max = *a.nmax;
        p.auto_n_max = false;
    }
    const TruncatedExpansion ex = expand(p);

    Sink sink(stdout_, a.out);
    std::ostream& os = sink.os();
    if (a.format == "csv")
        os << "psi,direct_re,direct_im,series_re,series_im,abs_err,rel_err\n";

    double max_abs = 0.0;
    double max_rel = 0.0;
    double min_direct = INFINITY;
    for (double psi : *grid) {
        const Complex d = direct_value(mu, z, psi);
        const Complex f = ex.evaluate(psi);
        const double ae = std::abs(f - d);
        const double re = ae / std::abs(d);
        max_abs = std::max(max_abs, ae);
        max_rel = std::max(max_rel, re);
        min_direct = std::min(min_direct, std::abs(d));
        if (a.format == "csv")
            os << num17(psi) << ',' << num17(d.real()) << ',' << num17(d.imag()) << ',' << num17(f.real()) << ','
               << num17(f.imag()) << ',' << num17(ae) << ',' << num17(re) << '\n';
        else
            emit(os, {{"record", "point"},
                      {"psi", psi},
                      {"direct", complex_json(d)},
                      {"series", complex_json(f)},
                      {"abs_err", ae},
                      {"rel_err", re}});
    }

    // The relative bound scales the absolute error bound by the smallest
    // direct value on the grid.
    const double rel_bound = ex.error_bound / min_direct;
    const bool ok = max_rel < 10.0 * rel_bound;
    const ordered_json summary = {{"record", "summary"},
                                  {"command", "reconstruct"},
                                  {"params", {{"mu", complex_json(mu)}, {"z", complex_json(z.value())}, {"tol", a.tol}}},
                                  {"n_max", ex.n_max()},
                                  {"decay_ratio", ex.decay_ratio},
                                  {"tail_bound", ex.tail_bound},
                                  {"error_bound", ex.error_bound},
                                  {"relative_bound", rel_bound},
                                  {"max_abs_err", max_abs},
                                  {"max_rel_err", max_rel},
                                  {"passed", ok},
                                  {"wall_time", seconds_since(t0)}};
    if (a.format == "csv") {
        os << "# summary n_max=" << ex.n_max() << " tail_bound=" << num17(ex.tail_bound)
           << " error_bound=" << num17(ex.error_bound) << " max_rel_err=" << num17(max_rel)
           << " passed=" << (ok ? "true" : "false") << '\n';
    } else {
        emit(os, summary);
    }
    return ok ? exit_ok : exit_bound_violated;
}

struct VerifyArgs {
    std::string suite = "all", format = "json", out;
    std::uint64_t seed = 42;
};

int cmd_verify(const VerifyArgs& a, std::ostream& stdout_) {
    const auto t0 = Clock::now();
    const VerifyReport report = run_verify(a.suite, a.seed);
    Sink sink(stdout_, a.out);
    std::ostream& os = sink.os();
    std::size_t failed = 0;
    if (a.format == "csv")
        os << "suite,property,samples,worst,threshold,passed\n";
    for (const PropertyReport& p : report.properties) {
        failed += p.passed ? 0 : 1;
        if (a.format == "csv") {
            os << p.suite << ",\"" << p.name << "\"," << p.samples << ',' << num17(p.worst) << ','
               << num17(p.threshold) << ',' << (p.passed ? "true" : "false") << '\n';
            continue;
        }
        ordered_json rec = {{"record", "property"},
                            {"suite", p.suite},
                            {"name", p.name},
                            {"samples", p.samples},
                            {"worst", p.worst},
                            {"threshold", p.threshold},
                            {"passed", p.passed}};
        if (!p.note.empty())
            rec["note"] = p.note;
        emit(os, rec);
    }
    if (a.format != "csv")
        emit(os, {{"record", "summary"},
                  {"command", "verify"},
                  {"suite", a.suite},
                  {"seed", a.seed},
                  {"properties", report.properties.size()},
                  {"failed", failed},
                  {"passed", report.passed()},
                  {"wall_time", seconds_since(t0)}});
    return report.passed() ? exit_ok : exit_verify_failed;
}

} // namespace

std::optional<Complex> parse_complex(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    if (s.back() != 'i') {
        const auto v = parse_double(s);
        return v ? std::optional<Complex>(Complex(*v, 0.0)) : std::nullopt;
    }

    s.remove_suffix(1);
    // Split at the last sign that is not the leading one or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);

    double im = 0.0;
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else if (const auto v = parse_double(im_part))
        im = *v;
    else
        return std::nullopt;

    double re = 0.0;
    if (!re_part.empty()) {
        const auto v = parse_double(re_part);
        if (!v)
            return std::nullopt;
        re = *v;
    }
    return Complex(re, im);
}

std::optional<double> parse_real_with_pi(std::string_view s) {
    if (const auto v = parse_double(s))
        return v;
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        sign = s.front() == '-' ? -1.0 : 1.0;
        s.remove_prefix(1);
    }
    if (s == "pi")
        return sign * pi;
    if (s.size() > 3 && s.substr(s.size() - 3) == "*pi") {
        const auto k = parse_double(s.substr(0, s.size() - 3));
        if (k)
            return sign * *k * pi;
    }
    if (s.size() > 3 && s.substr(0, 3) == "pi/") {
        const auto k = parse_double(s.substr(3));
        if (k && *k != 0.0)
            return sign * pi / *k;
    }
    return std::nullopt;
}

std::optional<std::vector<double>> parse_grid(std::string_view s) {
    const std::size_t c1 = s.find(':');
    if (c1 == std::string_view::npos)
        return std::nullopt;
    const std::size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string_view::npos || s.find(':', c2 + 1) != std::string_view::npos)
        return std::nullopt;
    const auto a = parse_real_with_pi(s.substr(0, c1));
    const auto b = parse_real_with_pi(s.substr(c1 + 1, c2 - c1 - 1));
    const std::string_view cs = s.substr(c2 + 1);
    int count = 0;
    const auto [p, ec] = std::from_chars(cs.data(), cs.data() + cs.size(), count);
    if (!a || !b || ec != std::errc() || p != cs.data() + cs.size() || count < 2 || count > 10'000'000)
        return std::nullopt;
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        g[static_cast<std::size_t>(i)] = *a + (*b - *a) * i / (count - 1);
    return g;
}

unsigned resolve_threads(std::optional<unsigned> flag) {
    if (flag)
        return std::max(1u, *flag);
    if (const char* env = std::getenv("HEINE_THREADS")) {
        unsigned v = 0;
        const std::string_view s(env);
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size() && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fourier expansion of (z - cos psi)^(-mu) and Legendre functions Q_nu^mu(z)", "heine"};
    app.require_subcommand(1);
    app.footer("Complex literals: a+bi, a-bi, a (real) or bi, e.g. 0.6+0.3i, -2+0.5i, 2, 1.5i.\n"
               "Exit codes: 0 ok, 1 verification failure, 2 usage or domain error, 3 numerical bound violated.\n"
               "HEINE_THREADS sets the worker count when --threads is not given.");

    const std::vector<std::string> formats = {"json", "csv"};

    CoeffArgs ca;
    auto* coeff = app.add_subcommand("coeff", "Tabulate A_{mu,n}(z), n = 0..nmax (Neumann factor excluded)");
    coeff->add_option("--mu", ca.mu, "exponent mu")->required();
    coeff->add_option("--z", ca.z, "argument z off (-inf, 1], |z| > 1")->required();
    coeff->add_option("--nmax", ca.nmax, "last mode; omitted: chosen from --tol");
    coeff->add_option("--tol", ca.tol, "relative tail target when --nmax is omitted")->capture_default_str();
    coeff->add_option("--format", ca.format)->check(CLI::IsMember(formats))->capture_default_str();
    coeff->add_option("--threads", ca.threads, "worker count");
    coeff->add_option("--out", ca.out, "write to this file instead of stdout");

    LegendreArgs la;
    auto* leg = app.add_subcommand("legendre", "Evaluate Q_nu^order(z)");
    leg->add_option("--nu", la.nu, "degree nu");
    leg->add_option("--order", la.order, "order mu");
    leg->add_option("--z", la.z, "argument z");
    leg->add_option("--backend", la.backend, "auto, hyp, closed_form, elliptic_rec, order_rec or all")
        ->capture_default_str();
    leg->add_option("--format", la.format)->check(CLI::IsMember(formats))->capture_default_str();
    leg->add_flag("--dump-dispatch", la.dump_dispatch, "print the backend dispatch table");
    leg->add_option("--out", la.out, "write to this file instead of stdout");

    ReconstructArgs ra;
    auto* rec = app.add_subcommand("reconstruct", "Compare the truncated series with direct evaluation");
    rec->add_option("--mu", ra.mu, "exponent mu")->required();
    rec->add_option("--z", ra.z, "argument z")->required();
    rec->add_option("--grid", ra.grid, "psi grid start:stop:count, pi allowed")->capture_default_str();
    rec->add_option("--tol", ra.tol, "relative tail target")->capture_default_str();
    rec->add_option("--nmax", ra.nmax, "fixed truncation order (disables auto)");
    rec->add_option("--format", ra.format)->check(CLI::IsMember(formats))->capture_default_str();
    rec->add_option("--threads", ra.threads, "worker count");
    rec->add_option("--out", ra.out, "write to this file instead of stdout");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run the property and oracle suites");
    std::string suites_help = "all";
    for (std::string_view s : verify_suites())
        suites_help += ", " + std::string(s);
    ver->add_option("--suite", va.suite, suites_help)->capture_default_str();
    ver->add_option("--seed", va.seed)->capture_default_str();
    ver->add_option("--format", va.format)->check(CLI::IsMember(formats))->capture_default_str();
    ver->add_option("--out", va.out, "write to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*coeff)
            return cmd_coeff(ca, out);
        if (*leg)
            return cmd_legendre(la, out);
        if (*rec)
            return cmd_reconstruct(ra, out);
        return cmd_verify(va, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_bound_violated;
    }
}

} // namespace heine::cli

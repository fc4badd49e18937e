#pragma once

// Command-line driver: bound, compose, verify, sharpness, report.
//
// Exit status: 0 success, 1 verification found a violation, 2 usage or
// input error, 3 I/O failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hschwarz/bounds.hpp"
#include "hschwarz/error.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/io.hpp"
#include "hschwarz/series.hpp"
#include "hschwarz/sharpness.hpp"
#include "hschwarz/transforms.hpp"
#include "hschwarz/verify.hpp"

namespace hschwarz::cli {

enum exit_status : int { ok = 0, violation = 1, usage = 2, io_failure = 3 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Real number with optional pi factors: "0.5", "-1e-3", "4/pi", "4/π", "pi/4", "2*pi".
inline double parse_real(const std::string& text) {
    if (text.empty()) throw usage_error("empty number");
    auto factor = [&](std::string tok) -> double {
        bool negative = false;
        if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
            negative = tok[0] == '-';
            tok.erase(0, 1);
        }
        double v = 0.0;
        if (tok == "pi" || tok == "π") {
            v = pi;
        } else {
            std::size_t used = 0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw usage_error("not a number: '" + text + "'");
            }
            if (used != tok.size()) throw usage_error("not a number: '" + text + "'");
        }
        return negative ? -v : v;
    };
    double value = 1.0;
    char op = '*';
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const bool end = i == text.size();
        if (end || text[i] == '*' || text[i] == '/') {
            const double f = factor(text.substr(start, i - start));
            value = op == '*' ? value * f : value / f;
            if (!end) op = text[i];
            start = i + 1;
        }
    }
    if (!std::isfinite(value)) throw usage_error("number is not finite: '" + text + "'");
    return value;
}

/// "re" or "re,im".
inline complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text), 0.0};
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

struct BoundArgs {
    std::string theorem;
    int p = 1;
    std::optional<std::string> s, r, a, alpha, beta;
};

struct ComposeArgs {
    std::string input;
    std::optional<std::string> output;
    std::optional<std::string> mobius_a;
    std::optional<std::string> strip_theta;
    std::optional<int> order;
};

struct VerifyArgs {
    std::string inequality;
    int samples = 200;
    std::uint64_t seed = 42;
    std::vector<int> orders{1, 2, 3};
    std::optional<int> radii, angles;
    std::optional<std::string> rmax, tol;
    std::optional<std::string> output, csv;
    int threads = 1;
};

struct SharpnessArgs {
    int p = 1;
    std::string family = "rotation";
    int iterations = 0;
    std::uint64_t seed = 1;
    int degree = 0;
    std::optional<std::string> output;
};

struct ReportArgs {
    std::string input;
    std::optional<std::string> csv;
};

namespace detail {

inline double need(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw usage_error(std::string("missing --") + flag);
    return parse_real(*v);
}

inline void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& out) {
    if (path) {
        write_file(*path, content);
    } else {
        out << content;
    }
}

inline double evaluate_bound(const BoundArgs& b) {
    const std::string& t = b.theorem;
    if (t == "A" || t == "lemmaA") return analytic_schwarz_pick_bound(b.p, need(b.s, "s"), need(b.r, "r"));
    if (t == "B" || t == "lemmaB") return classical_harmonic_bound(b.p, need(b.r, "r"));
    if (t == "1.3" || t == "lemma1.3") return improved_harmonic_bound(b.p, need(b.s, "s"), need(b.r, "r"));
    if (t == "1.1" || t == "theorem1.1") return boundary_lower_bound(b.p, need(b.s, "s"));
    if (t == "1.2" || t == "theorem1.2") {
        BoundQuery q;
        q.p = b.p;
        q.s = need(b.s, "s");
        q.a = b.a ? parse_complex(*b.a) : complex{};
        if (!b.alpha) throw usage_error("missing --alpha");
        q.alpha = parse_complex(*b.alpha);
        q.beta = b.beta ? parse_complex(*b.beta) : q.alpha;
        return general_boundary_lower_bound(q);
    }
    if (t == "slope") return limit_slope(b.p, need(b.s, "s"));
    if (t == "slope-numeric") return limit_slope_numeric(b.p, need(b.s, "s")).value;
    if (t == "ratio") return moebius_ratio(need(b.s, "s"), need(b.r, "r"));
    throw usage_error("unknown --theorem '" + t + "'");
}

inline int run_bound(const BoundArgs& b, std::ostream& out) {
    out << format15(evaluate_bound(b)) << '\n';
    return ok;
}

inline int run_compose(const ComposeArgs& c, std::ostream& out) {
    if (c.mobius_a.has_value() == c.strip_theta.has_value()) {
        throw usage_error("compose needs exactly one of --mobius-a or --strip-theta");
    }
    const HarmonicMap w = map_from_json(parse_json(read_file(c.input), c.input));
    const int order = c.order.value_or(w.truncation_order());
    json result;
    if (c.mobius_a) {
        result = to_json(precompose_mobius(w, parse_complex(*c.mobius_a), order));
    } else {
        const ComplexSeries f = projection(w, parse_real(*c.strip_theta));
        result = to_json(strip_to_disk(f, order));
    }
    emit(c.output, result.dump(2) + "\n", out);
    return ok;
}

inline VerificationReport run_suite(const VerifyArgs& v) {
    SuiteOptions opt;
    opt.seed = v.seed;
    opt.samples = v.samples;
    opt.orders = v.orders;
    opt.threads = v.threads;
    const std::string& kind = v.inequality;
    const bool strip = kind == "strip";
    opt.grid = strip ? GridSpec{16, 64, 0.9} : GridSpec{};
    if (v.radii) opt.grid.radii = *v.radii;
    if (v.angles) opt.grid.angles = *v.angles;
    if (v.rmax) opt.grid.rmax = parse_real(*v.rmax);
    opt.grid.validate();
    if (opt.samples < 0) throw usage_error("--samples must be non-negative");
    for (int p : opt.orders) {
        if (p < 1 || p > 10) throw usage_error("--p values must lie in [1, 10]");
    }

    auto tol_or = [&](double fallback) { return v.tol ? parse_real(*v.tol) : fallback; };
    if (kind == "lemma1.3" || kind == "interior") {
        opt.tol = tol_or(interior_tolerance);
        return run_interior_suite(opt);
    }
    if (kind == "theorem1.2" || kind == "theorem1.1" || kind == "boundary") {
        opt.tol = tol_or(boundary_tolerance);
        return run_boundary_suite(opt);
    }
    if (kind == "transport") {
        opt.tol = tol_or(identity_tolerance);
        return run_transport_suite(opt);
    }
    if (strip) {
        opt.tol = tol_or(algebraic_tolerance);
        return run_strip_suite(opt);
    }
    if (kind == "coefficient") {
        opt.tol = tol_or(interior_tolerance);
        return run_coefficient_suite(opt);
    }
    throw usage_error("unknown --inequality '" + kind + "'");
}

inline void print_summary(const VerificationReport& r, std::ostream& os) {
    os << r.inequality << ": samples=" << r.samples << " grid_points=" << r.grid_points
       << " violations=" << r.violations << " min_margin=" << format15(r.min_margin)
       << " tolerance=" << format15(r.tolerance);
    if (r.ordering_violations) os << " ordering_violations=" << r.ordering_violations;
    if (r.cross_check_failures) os << " cross_check_failures=" << r.cross_check_failures;
    os << (r.passed() ? " PASS" : " FAIL") << '\n';
    if (!r.passed()) {
        os << "worst case: seed=" << r.worst_case.seed << " grid_index=" << r.worst_case.grid_index
           << " r=" << format15(r.worst_case.r) << " theta=" << format15(r.worst_case.theta) << '\n';
    }
}

inline int run_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
    const VerificationReport report = run_suite(v);
    const std::string text = to_json(report).dump(2) + "\n";
    if (v.output) {
        write_file(*v.output, text);
    }
    if (v.csv) write_file(*v.csv, to_csv(report));
    print_summary(report, v.output ? out : err);
    if (!v.output) out << text;
    return report.passed() ? ok : violation;
}

inline int run_sharpness(const SharpnessArgs& s, std::ostream& out) {
    SharpnessFamily family;
    if (s.family == "rotation") {
        family = SharpnessFamily::rotation;
    } else if (s.family == "mobius") {
        family = SharpnessFamily::mobius;
    } else if (s.family == "polynomial") {
        family = SharpnessFamily::polynomial;
    } else {
        throw usage_error("unknown --family '" + s.family + "'");
    }
    if (s.p < 1) throw usage_error("--p must be >= 1");
    if (s.iterations < 0) throw usage_error("--iterations must be non-negative");
    SampleSpec base;
    base.seed = s.seed;
    base.p = s.p;
    base.degree = s.degree > 0 ? s.degree : s.p + 2;
    const SharpnessResult result = sharpness_search(s.p, family, base, s.iterations);
    if (s.output) write_file(*s.output, to_json(result).dump(2) + "\n");
    out << "family=" << to_string(result.family) << " p=" << result.p << " best_margin=" << format15(result.best_margin)
        << " evaluations=" << result.trace.size() << " projections=" << result.projections << '\n';
    if (result.suspected_error) {
        out << "negative margin: suspected implementation error\n";
        return violation;
    }
    return ok;
}

inline int run_report(const ReportArgs& r, std::ostream& out) {
    const VerificationReport report = report_from_json(parse_json(read_file(r.input), r.input));
    print_summary(report, out);
    out << "comparator_min_margin=" << format15(report.comparator_min_margin)
        << " max_cross_check_error=" << format15(report.max_cross_check_error) << '\n';
    if (r.csv) {
        write_file(*r.csv, to_csv(report));
    } else {
        out << '\n' << to_csv(report);
    }
    return ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Schwarz-type bounds for harmonic self-maps of the unit disk", "hschwarz"};
    app.require_subcommand(1);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate a closed-form bound");
    bound_cmd->add_option("--theorem", bound.theorem, "A, B, 1.3, 1.1, 1.2, slope, slope-numeric, ratio")->required();
    bound_cmd->add_option("--p", bound.p, "zero order p");
    bound_cmd->add_option("--s", bound.s, "coefficient sum (accepts 4/pi)");
    bound_cmd->add_option("--r", bound.r, "radius");
    bound_cmd->add_option("--a", bound.a, "interior zero as re[,im]");
    bound_cmd->add_option("--alpha", bound.alpha, "boundary point as re[,im]");
    bound_cmd->add_option("--beta", bound.beta, "boundary value as re[,im]");

    ComposeArgs compose_args;
    auto* compose_cmd = app.add_subcommand("compose", "precompose with a disk automorphism or transport to the disk");
    compose_cmd->add_option("--input", compose_args.input, "map JSON")->required();
    compose_cmd->add_option("--output", compose_args.output, "output JSON (default stdout)");
    compose_cmd->add_option("--mobius-a", compose_args.mobius_a, "automorphism parameter re[,im]");
    compose_cmd->add_option("--strip-theta", compose_args.strip_theta, "projection angle theta");
    compose_cmd->add_option("--order", compose_args.order, "truncation order of the result");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a seeded verification corpus");
    verify_cmd->add_option("--inequality", verify_args.inequality, "lemma1.3, theorem1.2, transport, strip, coefficient")
        ->required();
    verify_cmd->add_option("--samples", verify_args.samples, "samples per order");
    verify_cmd->add_option("--seed", verify_args.seed, "base seed");
    verify_cmd->add_option("--p", verify_args.orders, "zero orders (default 1 2 3)");
    verify_cmd->add_option("--radii", verify_args.radii, "grid radii");
    verify_cmd->add_option("--angles", verify_args.angles, "grid angles");
    verify_cmd->add_option("--rmax", verify_args.rmax, "largest grid radius");
    verify_cmd->add_option("--tol", verify_args.tol, "violation tolerance");
    verify_cmd->add_option("--output", verify_args.output, "report JSON path");
    verify_cmd->add_option("--csv", verify_args.csv, "per-sample CSV path");
    verify_cmd->add_option("--threads", verify_args.threads, "worker threads");

    SharpnessArgs sharp;
    auto* sharp_cmd = app.add_subcommand("sharpness", "search for the smallest boundary margin");
    sharp_cmd->add_option("--p", sharp.p, "zero order p");
    sharp_cmd->add_option("--family", sharp.family, "rotation, mobius, polynomial");
    sharp_cmd->add_option("--iterations", sharp.iterations, "simplex iteration cap (0: 200 * dim)");
    sharp_cmd->add_option("--seed", sharp.seed, "seed for the polynomial starting point");
    sharp_cmd->add_option("--degree", sharp.degree, "polynomial degree (default p + 2)");
    sharp_cmd->add_option("--output", sharp.output, "trace JSON path");

    ReportArgs report_args;
    auto* report_cmd = app.add_subcommand("report", "render a report JSON as text and CSV");
    report_cmd->add_option("--input", report_args.input, "report JSON")->required();
    report_cmd->add_option("--csv", report_args.csv, "CSV path (default: appended to stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*bound_cmd) return detail::run_bound(bound, out);
        if (*compose_cmd) return detail::run_compose(compose_args, out);
        if (*verify_cmd) return detail::run_verify(verify_args, out, err);
        if (*sharp_cmd) return detail::run_sharpness(sharp, out);
        if (*report_cmd) return detail::run_report(report_args, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == errc::io ? io_failure : usage;
    }
    return usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<const char*> argv{"hschwarz"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hschwarz::cli

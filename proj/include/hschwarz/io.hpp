#pragma once

// JSON and CSV encodings of series, maps, reports and sharpness traces.
//
//   series : {"center": [re, im], "coeffs": [[re, im], ...]}
//   map    : {"h": <series>, "g": <series>}
//
// Series and maps keep full double precision so they round-trip exactly.
// Reports, traces and CSV rows carry 15 significant digits.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hschwarz/error.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/report.hpp"
#include "hschwarz/series.hpp"
#include "hschwarz/sharpness.hpp"

namespace hschwarz {

using json = nlohmann::json;

/// printf %.15g.
inline std::string format15(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

/// x rounded to 15 significant digits; non-finite values pass through.
inline double round15(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format15(x).c_str(), nullptr);
}

namespace detail {

inline json finite_or_null(double x) { return std::isfinite(x) ? json(round15(x)) : json(nullptr); }

inline double number_or(const json& j, double fallback) { return j.is_null() ? fallback : j.get<double>(); }

inline json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

inline complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw error(errc::io, "complex value must be [re, im]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace detail

inline json to_json(const ComplexSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(detail::complex_json(c));
    return {{"center", detail::complex_json(s.center())}, {"coeffs", std::move(coeffs)}};
}

inline ComplexSeries series_from_json(const json& j) {
    try {
        std::vector<complex> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::complex_from(c));
        return ComplexSeries(std::move(coeffs), detail::complex_from(j.at("center")));
    } catch (const json::exception& e) {
        throw error(errc::io, std::string("malformed series JSON: ") + e.what());
    }
}

inline json to_json(const HarmonicMap& w) { return {{"h", to_json(w.h())}, {"g", to_json(w.g())}}; }

inline HarmonicMap map_from_json(const json& j) {
    try {
        return HarmonicMap(series_from_json(j.at("h")), series_from_json(j.at("g")));
    } catch (const json::exception& e) {
        throw error(errc::io, std::string("malformed map JSON: ") + e.what());
    }
}

inline json to_json(const ReportRecord& r) {
    return {{"inequality", r.inequality},          {"seed", r.seed},
            {"p", r.p},                            {"s", detail::finite_or_null(r.s)},
            {"grid_r", detail::finite_or_null(r.grid_r)}, {"grid_theta", detail::finite_or_null(r.grid_theta)},
            {"attained", detail::finite_or_null(r.attained)}, {"bound", detail::finite_or_null(r.bound)},
            {"margin", detail::finite_or_null(r.margin)}};
}

inline json to_json(const VerificationReport& r) {
    json records = json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    return {
        {"checked_inequality", r.inequality},
        {"samples", r.samples},
        {"grid_points", r.grid_points},
        {"min_margin", detail::finite_or_null(r.min_margin)},
        {"worst_case",
         {{"seed", r.worst_case.seed},
          {"grid_index", r.worst_case.grid_index},
          {"r", detail::finite_or_null(r.worst_case.r)},
          {"theta", detail::finite_or_null(r.worst_case.theta)}}},
        {"violations", r.violations},
        {"tolerance", r.tolerance},
        {"ordering_violations", r.ordering_violations},
        {"comparator_min_margin", detail::finite_or_null(r.comparator_min_margin)},
        {"cross_check_failures", r.cross_check_failures},
        {"max_cross_check_error", detail::finite_or_null(r.max_cross_check_error)},
        {"passed", r.passed()},
        {"records", std::move(records)},
    };
}

inline VerificationReport report_from_json(const json& j) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    try {
        VerificationReport r;
        r.inequality = j.at("checked_inequality").get<std::string>();
        r.samples = j.at("samples").get<long long>();
        r.grid_points = j.at("grid_points").get<long long>();
        r.min_margin = detail::number_or(j.at("min_margin"), inf);
        const auto& wc = j.at("worst_case");
        r.worst_case = {wc.at("seed").get<std::uint64_t>(), wc.at("grid_index").get<int>(),
                        detail::number_or(wc.at("r"), 0.0), detail::number_or(wc.at("theta"), 0.0)};
        r.violations = j.at("violations").get<long long>();
        r.tolerance = j.at("tolerance").get<double>();
        r.ordering_violations = j.value("ordering_violations", 0LL);
        r.comparator_min_margin = j.contains("comparator_min_margin") ? detail::number_or(j["comparator_min_margin"], inf) : inf;
        r.cross_check_failures = j.value("cross_check_failures", 0LL);
        r.max_cross_check_error = j.contains("max_cross_check_error") ? detail::number_or(j["max_cross_check_error"], 0.0) : 0.0;
        for (const auto& rec : j.at("records")) {
            r.records.push_back({rec.at("inequality").get<std::string>(), rec.at("seed").get<std::uint64_t>(),
                                 rec.at("p").get<int>(), detail::number_or(rec.at("s"), 0.0),
                                 detail::number_or(rec.at("grid_r"), 0.0), detail::number_or(rec.at("grid_theta"), 0.0),
                                 detail::number_or(rec.at("attained"), 0.0), detail::number_or(rec.at("bound"), 0.0),
                                 detail::number_or(rec.at("margin"), inf)});
        }
        return r;
    } catch (const json::exception& e) {
        throw error(errc::io, std::string("malformed report JSON: ") + e.what());
    }
}

inline constexpr const char* csv_header = "inequality,seed,p,s,grid_r,grid_theta,attained,bound,margin";

inline std::string to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << csv_header << '\n';
    for (const auto& rec : r.records) {
        out << rec.inequality << ',' << rec.seed << ',' << rec.p << ',' << format15(rec.s) << ','
            << format15(rec.grid_r) << ',' << format15(rec.grid_theta) << ',' << format15(rec.attained) << ','
            << format15(rec.bound) << ',' << format15(rec.margin) << '\n';
    }
    return out.str();
}

inline json to_json(const SharpnessResult& r) {
    auto round_all = [](const std::vector<double>& xs) {
        json out = json::array();
        for (double x : xs) out.push_back(detail::finite_or_null(x));
        return out;
    };
    json trace = json::array();
    for (const auto& t : r.trace) {
        trace.push_back({{"evaluation", t.evaluation},
                         {"params", round_all(t.params)},
                         {"margin", detail::finite_or_null(t.margin)},
                         {"projected", t.projected}});
    }
    return {{"family", std::string(to_string(r.family))},
            {"p", r.p},
            {"best_margin", detail::finite_or_null(r.best_margin)},
            {"best_params", round_all(r.best_params)},
            {"iterations", r.iterations},
            {"evaluations", r.trace.size()},
            {"projections", r.projections},
            {"suspected_error", r.suspected_error},
            {"trace", std::move(trace)}};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error(errc::io, "cannot write " + path);
    out << content;
    if (!out) throw error(errc::io, "write failed for " + path);
}

inline json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(errc::io, origin + ": " + e.what());
    }
}

}  // namespace hschwarz

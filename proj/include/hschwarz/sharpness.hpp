#pragma once

// Numerical probing of how tight the boundary bound is over small witness
// families. The search only reports the smallest margin it found.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "hschwarz/error.hpp"
#include "hschwarz/generate.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/optimize.hpp"
#include "hschwarz/verify.hpp"

namespace hschwarz {

enum class SharpnessFamily {
    rotation,    ///< e^{i theta} z^p; parameter theta
    mobius,      ///< ((z - a)/(1 - a z))^p with real a in [0, 0.9]; parameter a
    polynomial,  ///< z^p A(z) + conj(z^p B(z)), A(0) = 1; parameters Re/Im of A_1.., B_0..
};

constexpr std::string_view to_string(SharpnessFamily f) noexcept {
    switch (f) {
        case SharpnessFamily::rotation: return "rotation";
        case SharpnessFamily::mobius: return "mobius";
        case SharpnessFamily::polynomial: return "polynomial";
    }
    return "unknown";
}

inline constexpr double mobius_family_max = 0.9;
inline constexpr double suspicious_margin = -1e-6;

struct SharpnessTraceEntry {
    int evaluation = 0;
    std::vector<double> params;
    double margin = 0.0;
    bool projected = false;
};

struct SharpnessResult {
    SharpnessFamily family = SharpnessFamily::rotation;
    int p = 1;
    double best_margin = std::numeric_limits<double>::infinity();
    std::vector<double> best_params;
    std::vector<SharpnessTraceEntry> trace;
    int projections = 0;
    int iterations = 0;
    /// A negative margin below -1e-6 contradicts the theorem and points at a
    /// bug in the evaluation chain.
    bool suspected_error = false;
};

namespace detail {

struct Witness {
    HarmonicMap map;
    complex zero{};
    complex alpha{1.0, 0.0};
    bool projected = false;
};

inline Witness rotation_witness(int p, const std::vector<double>& params) {
    return {HarmonicMap::analytic(ComplexSeries::monomial(std::polar(1.0, params[0]), p, p)), {}, complex(1.0), false};
}

inline Witness mobius_witness(int p, const SampleSpec& base, const std::vector<double>& params) {
    const double a = std::clamp(params[0], 0.0, mobius_family_max);
    SampleSpec spec = base;
    spec.family = SampleFamily::mobius_witness;
    spec.p = p;
    spec.zero = a;
    const Sample sample = generate_sample(spec);
    return {sample.map, sample.zero, sample.alpha, a != params[0]};
}

inline int polynomial_extra(const SampleSpec& base, int p) { return std::max(base.degree, p) - p; }

inline Witness polynomial_witness(int p, const SampleSpec& base, const std::vector<double>& params) {
    const int extra = polynomial_extra(base, p);
    std::vector<complex> a(static_cast<std::size_t>(extra) + 1), b(static_cast<std::size_t>(extra) + 1);
    a[0] = 1.0;
    std::size_t at = 0;
    for (int k = 1; k <= extra; ++k, at += 2) a[static_cast<std::size_t>(k)] = {params[at], params[at + 1]};
    for (int k = 0; k <= extra; ++k, at += 2) b[static_cast<std::size_t>(k)] = {params[at], params[at + 1]};

    SampleSpec spec = base;
    spec.p = p;
    bool projected = false;
    for (int halving = 0;; ++halving) {
        HarmonicMap w(times_zero_factor(a, {}, p, spec.truncation_order), times_zero_factor(b, {}, p, spec.truncation_order));
        if (admissible(w, spec)) {
            const auto peak = boundary_maximum(w);
            const complex alpha = std::polar(1.0, peak.angle);
            w = w.scaled(1.0 / peak.value);
            w = w.scaled(1.0 / std::abs(w.eval(alpha)));
            return {w, {}, alpha, projected};
        }
        if (halving == 60) throw error(errc::generation_failure, "could not project parameters to a sense-preserving map");
        projected = true;
        for (std::size_t k = 1; k < a.size(); ++k) a[k] *= 0.5;
        for (auto& v : b) v *= 0.5;
    }
}

inline std::vector<double> polynomial_start(int p, const SampleSpec& base) {
    SampleSpec spec = base;
    spec.p = p;
    spec.degree = std::max(base.degree, p);
    spec.family = SampleFamily::polynomial;
    spec.zero = {};
    Xorshift64Star rng(spec.seed);
    const HarmonicMap w = polynomial_draw(rng, spec);
    const int extra = spec.degree - p;
    const complex lead = w.h().coeff(p);
    std::vector<double> params;
    for (int k = 1; k <= extra; ++k) {
        const complex v = w.h().coeff(p + k) / lead;
        params.push_back(v.real());
        params.push_back(v.imag());
    }
    for (int k = 0; k <= extra; ++k) {
        const complex v = w.g().coeff(p + k) / std::conj(lead);
        params.push_back(v.real());
        params.push_back(v.imag());
    }
    return params;
}

}  // namespace detail

/// Nelder-Mead over the family's real parameters, minimising
/// attained - bound. `iterations` caps the simplex iterations (0: 200 * dim).
inline SharpnessResult sharpness_search(int p, SharpnessFamily family, const SampleSpec& base = {},
                                        int iterations = 0) {
    if (p < 1) throw error(errc::domain, "p must be >= 1");
    SharpnessResult result;
    result.family = family;
    result.p = p;

    std::vector<double> start;
    switch (family) {
        case SharpnessFamily::rotation: start = {0.0}; break;
        case SharpnessFamily::mobius: start = {0.45}; break;
        case SharpnessFamily::polynomial: start = detail::polynomial_start(p, base); break;
    }

    auto objective = [&](const std::vector<double>& params) {
        detail::Witness witness;
        switch (family) {
            case SharpnessFamily::rotation: witness = detail::rotation_witness(p, params); break;
            case SharpnessFamily::mobius: witness = detail::mobius_witness(p, base, params); break;
            case SharpnessFamily::polynomial: witness = detail::polynomial_witness(p, base, params); break;
        }
        const BoundaryEvaluation e = evaluate_boundary_theorem(witness.map, witness.zero, witness.alpha);
        if (witness.projected) ++result.projections;
        result.trace.push_back({static_cast<int>(result.trace.size()), params, e.margin, witness.projected});
        if (e.margin < result.best_margin) {
            result.best_margin = e.margin;
            result.best_params = params;
        }
        return e.margin;
    };

    NelderMeadOptions options;
    options.max_iterations = iterations;
    const auto nm = nelder_mead(objective, start, options);
    result.iterations = nm.iterations;
    result.suspected_error = result.best_margin < suspicious_margin;
    return result;
}

}  // namespace hschwarz

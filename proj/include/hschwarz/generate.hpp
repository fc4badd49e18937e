#pragma once

// Seeded sample families of harmonic self-maps of the disk.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hschwarz/error.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/random.hpp"
#include "hschwarz/series.hpp"

namespace hschwarz {

enum class SampleFamily { polynomial, poisson_extension, mobius_witness };

constexpr std::string_view to_string(SampleFamily f) noexcept {
    switch (f) {
        case SampleFamily::polynomial: return "polynomial";
        case SampleFamily::poisson_extension: return "poisson_extension";
        case SampleFamily::mobius_witness: return "mobius_witness";
    }
    return "unknown";
}

/// How a polynomial draw is scaled into the disk.
enum class Normalization {
    interior,  ///< divide by boundary max * (1 + 1e-9): ||w||_inf < 1
    boundary,  ///< divide by boundary max exactly: |w(alpha)| = 1 at the argmax alpha
};

inline constexpr int boundary_samples = 2048;
inline constexpr int rejection_budget = 1000;
inline constexpr double interior_headroom = 1e-9;

struct SampleSpec {
    std::uint64_t seed = 0;
    int p = 1;
    int degree = 1;  ///< polynomial degree of h and g (polynomial family)
    SampleFamily family = SampleFamily::polynomial;
    double decay = 0.35;  ///< coefficient damping rho^k
    complex zero{};       ///< location of the order-p zero (polynomial, mobius_witness)
    Normalization normalization = Normalization::interior;
    int truncation_order = default_truncation_order;

    void validate() const {
        if (p < 1) throw error(errc::domain, "sample zero order p must be >= 1");
        if (!(decay > 0.0 && decay < 1.0)) throw error(errc::domain, "decay must lie in (0, 1)");
        if (family == SampleFamily::polynomial) {
            if (degree < p) throw error(errc::domain, "polynomial degree must be >= p");
            if (degree > truncation_order) throw error(errc::domain, "degree exceeds truncation order");
        }
        if (!(std::abs(zero) < 1.0)) throw error(errc::domain, "sample zero must lie in the open disk");
    }
};

struct Sample {
    HarmonicMap map;
    complex alpha{1.0, 0.0};  ///< boundary point where |w| is largest (1 for boundary witnesses)
    complex zero{};           ///< where the order-p zero sits
    int attempts = 1;
};

struct BoundaryMaximum {
    double value = 0.0;
    double angle = 0.0;
};

/// max |w(e^{it})|: 2048-point scan, then golden-section refinement around
/// the best few local maxima.
inline BoundaryMaximum boundary_maximum(const HarmonicMap& w, int samples = boundary_samples) {
    std::vector<double> mod(static_cast<std::size_t>(samples));
    const double step = 2.0 * pi / samples;
    for (int j = 0; j < samples; ++j) mod[static_cast<std::size_t>(j)] = std::abs(w.eval(std::polar(1.0, j * step)));

    std::vector<int> peaks;
    for (int j = 0; j < samples; ++j) {
        const double prev = mod[static_cast<std::size_t>((j + samples - 1) % samples)];
        const double next = mod[static_cast<std::size_t>((j + 1) % samples)];
        const double here = mod[static_cast<std::size_t>(j)];
        if (here >= prev && here >= next) peaks.push_back(j);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
        return mod[static_cast<std::size_t>(a)] > mod[static_cast<std::size_t>(b)] ||
               (mod[static_cast<std::size_t>(a)] == mod[static_cast<std::size_t>(b)] && a < b);
    });
    if (peaks.size() > 4) peaks.resize(4);

    const auto f = [&](double t) { return std::abs(w.eval(std::polar(1.0, t))); };
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    BoundaryMaximum best;
    best.value = -1.0;
    for (int j : peaks) {
        double lo = (j - 1) * step;
        double hi = (j + 1) * step;
        double x1 = hi - golden * (hi - lo);
        double x2 = lo + golden * (hi - lo);
        double f1 = f(x1);
        double f2 = f(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + golden * (hi - lo);
                f2 = f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - golden * (hi - lo);
                f1 = f(x1);
            }
        }
        double t = 0.5 * (lo + hi);
        double v = f(t);
        if (mod[static_cast<std::size_t>(j)] > v) {
            t = j * step;
            v = mod[static_cast<std::size_t>(j)];
        }
        if (v > best.value) best = {v, t};
    }
    best.angle = std::remainder(best.angle, 2.0 * pi);
    if (best.angle < 0.0) best.angle += 2.0 * pi;
    return best;
}

namespace detail {

// (z - zero)^p * poly, expanded about 0.
inline ComplexSeries times_zero_factor(const std::vector<complex>& poly, complex zero, int p, int order) {
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    std::copy(poly.begin(), poly.end(), c.begin());
    const ComplexSeries factor({-zero, complex(1.0)});
    ComplexSeries out(std::move(c));
    const ComplexSeries linear = factor.truncated(order);
    for (int k = 0; k < p; ++k) out = out * linear;
    return out;
}

inline HarmonicMap polynomial_draw(Xorshift64Star& rng, const SampleSpec& spec) {
    const int extra = spec.degree - spec.p;
    std::vector<complex> a(static_cast<std::size_t>(extra) + 1);
    std::vector<complex> b(static_cast<std::size_t>(extra) + 1);
    a[0] = rng.unit();
    double damp = 1.0;
    for (int k = 1; k <= extra; ++k) {
        damp *= spec.decay;
        a[static_cast<std::size_t>(k)] = damp * rng.complex_normal();
    }
    damp = 1.0;
    double bmax = 0.0;
    for (int k = 0; k <= extra; ++k) {
        b[static_cast<std::size_t>(k)] = damp * rng.complex_normal();
        bmax = std::max(bmax, std::abs(b[static_cast<std::size_t>(k)]));
        damp *= spec.decay;
    }
    // Rescale so that the largest B coefficient, and with it |B(0)|, sits below |A(0)| = 1.
    const double kappa = rng.uniform();
    for (auto& v : b) v *= kappa / std::max(bmax, 1e-300);
    return HarmonicMap(times_zero_factor(a, spec.zero, spec.p, spec.truncation_order),
                       times_zero_factor(b, spec.zero, spec.p, spec.truncation_order));
}

inline bool admissible(const HarmonicMap& w, const SampleSpec& spec) {
    if (!is_sense_preserving(w).sense_preserving) return false;
    try {
        return zero_order_at(w, spec.zero).p == spec.p;
    } catch (const error&) {
        return false;
    }
}

inline Sample generate_polynomial(const SampleSpec& spec) {
    Xorshift64Star rng(spec.seed);
    for (int attempt = 1; attempt <= rejection_budget; ++attempt) {
        HarmonicMap w = polynomial_draw(rng, spec);
        if (!admissible(w, spec)) continue;
        const auto peak = boundary_maximum(w);
        const double divisor = spec.normalization == Normalization::interior
                                   ? peak.value * (1.0 + interior_headroom)
                                   : peak.value;
        Sample out{w.scaled(1.0 / divisor), std::polar(1.0, peak.angle), spec.zero, attempt};
        if (spec.normalization == Normalization::boundary) {
            // Land |w(alpha)| on 1 to rounding at the refined argmax.
            out.map = out.map.scaled(1.0 / std::abs(out.map.eval(out.alpha)));
        }
        return out;
    }
    throw error(errc::generation_failure,
                "no sense-preserving draw within " + std::to_string(rejection_budget) + " attempts (seed " +
                    std::to_string(spec.seed) + ", p " + std::to_string(spec.p) + ", degree " +
                    std::to_string(spec.degree) + ")");
}

// Boundary function e^{i theta0} rho(t) e^{i (p t + eps psi(t))} with
// 0 < rho <= 1; h takes the non-negative frequencies, g the conjugated
// negative ones.
inline Sample generate_poisson(const SampleSpec& spec) {
    Xorshift64Star rng(spec.seed);
    const complex rotation = rng.unit();
    const double eps = rng.uniform(0.0, 1.5);
    const double dent = rng.uniform(0.0, 0.5);
    const int dent_freq = 1 + static_cast<int>(rng.uniform() * 4.0);
    const double dent_phase = rng.uniform(0.0, 2.0 * pi);
    constexpr int modes = 6;
    std::vector<double> cos_c(modes), sin_c(modes);
    double damp = 1.0;
    for (int m = 0; m < modes; ++m) {
        cos_c[static_cast<std::size_t>(m)] = damp * rng.normal();
        sin_c[static_cast<std::size_t>(m)] = damp * rng.normal();
        damp *= spec.decay + (1.0 - spec.decay) * 0.5;
    }

    const int n = boundary_samples;
    const int order = spec.truncation_order;
    std::vector<complex> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * pi * j / n;
        double psi = 0.0;
        for (int m = 0; m < modes; ++m) {
            psi += cos_c[static_cast<std::size_t>(m)] * std::cos((m + 1) * t) +
                   sin_c[static_cast<std::size_t>(m)] * std::sin((m + 1) * t);
        }
        const double rho = 1.0 - dent * 0.5 * (1.0 + std::cos(dent_freq * t + dent_phase));
        values[static_cast<std::size_t>(j)] = rotation * std::polar(rho, spec.p * t + eps * psi);
    }
    std::vector<complex> twiddle(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) twiddle[static_cast<std::size_t>(j)] = std::polar(1.0, -2.0 * pi * j / n);
    std::vector<complex> h(static_cast<std::size_t>(order) + 1), g(static_cast<std::size_t>(order) + 1);
    for (int k = -order; k <= order; ++k) {
        complex acc{};
        for (int j = 0; j < n; ++j) {
            // e^{-i k t_j} with k t_j reduced exactly in integers
            const int phase = static_cast<int>((static_cast<long long>(k) * j % n + n) % n);
            acc += values[static_cast<std::size_t>(j)] * twiddle[static_cast<std::size_t>(phase)];
        }
        acc /= static_cast<double>(n);
        if (k >= 0) {
            h[static_cast<std::size_t>(k)] = acc;
        } else {
            g[static_cast<std::size_t>(-k)] = std::conj(acc);
        }
    }
    return {HarmonicMap(ComplexSeries(std::move(h)), ComplexSeries(std::move(g))), complex(1.0), complex{}, 1};
}

// Truncation order at which the Blaschke factor's tail is negligible on the
// closed disk.
inline int blaschke_order(complex a, int p, int floor_order) {
    const double m = std::abs(a);
    if (m == 0.0) return std::max(floor_order, p);
    const int needed = static_cast<int>(std::ceil(std::log(1e-20) / std::log(m))) + 16 * p;
    return std::clamp(needed, std::max(floor_order, p), 4096);
}

inline Sample generate_mobius(const SampleSpec& spec) {
    Xorshift64Star rng(spec.seed);
    const complex rotation = rng.unit();
    const int order = blaschke_order(spec.zero, spec.p, spec.truncation_order);
    // (z - a) / (1 - conj(a) z) = -a + (1 - |a|^2) sum_{k>=1} conj(a)^{k-1} z^k
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = -spec.zero;
    complex power = 1.0;
    for (int k = 1; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = (1.0 - std::norm(spec.zero)) * power;
        power *= std::conj(spec.zero);
    }
    const ComplexSeries factor(std::move(c));
    ComplexSeries h = factor;
    for (int k = 1; k < spec.p; ++k) h = h * factor;
    return {HarmonicMap::analytic(rotation * h), complex(1.0), spec.zero, 1};
}

}  // namespace detail

/// Deterministic in the spec. Polynomial draws are rejected and redrawn
/// until sense-preserving on the standard grid with a zero of order exactly
/// p at spec.zero.
inline Sample generate_sample(const SampleSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case SampleFamily::polynomial: return detail::generate_polynomial(spec);
        case SampleFamily::poisson_extension: return detail::generate_poisson(spec);
        case SampleFamily::mobius_witness: return detail::generate_mobius(spec);
    }
    throw error(errc::domain, "unknown sample family");
}

inline HarmonicMap generate(const SampleSpec& spec) { return generate_sample(spec).map; }

}  // namespace hschwarz

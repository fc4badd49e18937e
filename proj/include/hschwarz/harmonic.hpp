#pragma once

// Harmonic maps w = h + conj(g) with Wirtinger calculus.

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "hschwarz/error.hpp"
#include "hschwarz/series.hpp"

namespace hschwarz {

inline constexpr double default_map_zero_tolerance = 1e-10;

/// w = h + conj(g), with h and g expanded about the same center to the same
/// truncation order.
class HarmonicMap {
public:
    HarmonicMap() = default;

    HarmonicMap(ComplexSeries h, ComplexSeries g) : h_(std::move(h)), g_(std::move(g)) {
        if (h_.center() != g_.center()) throw error(errc::center_mismatch, "h and g must share a center");
        if (h_.truncation_order() != g_.truncation_order()) {
            throw error(errc::domain, "h and g must share a truncation order");
        }
    }

    /// Analytic map f, i.e. g = 0.
    static HarmonicMap analytic(ComplexSeries h) {
        auto g = ComplexSeries::zero(h.truncation_order(), h.center());
        return HarmonicMap(std::move(h), std::move(g));
    }

    const ComplexSeries& h() const noexcept { return h_; }
    const ComplexSeries& g() const noexcept { return g_; }
    complex center() const noexcept { return h_.center(); }
    int truncation_order() const noexcept { return h_.truncation_order(); }

    /// Expanded about 0 with g(0) = 0, the unique representation.
    bool is_canonical() const noexcept { return center() == complex{} && g_.coeff(0) == complex{}; }

    HarmonicMap canonicalized() const {
        HarmonicMap out = recentered(complex{});
        const complex g0 = out.g_.coeff(0);
        auto shift = ComplexSeries::constant(std::conj(g0), truncation_order());
        auto gshift = ComplexSeries::constant(g0, truncation_order());
        return HarmonicMap(out.h_ + shift, out.g_ - gshift);
    }

    HarmonicMap recentered(complex z0) const { return HarmonicMap(h_.recentered(z0), g_.recentered(z0)); }

    HarmonicMap truncated_to(int order) const { return HarmonicMap(h_.truncated(order), g_.truncated(order)); }

    HarmonicMap scaled(complex factor) const {
        // factor * conj(g) = conj(conj(factor) * g)
        return HarmonicMap(factor * h_, std::conj(factor) * g_);
    }

    double max_abs_coeff() const noexcept { return std::max(h_.max_abs_coeff(), g_.max_abs_coeff()); }

    complex eval(complex z) const noexcept { return h_.eval(z) + std::conj(g_.eval(z)); }
    complex operator()(complex z) const noexcept { return eval(z); }

    friend bool operator==(const HarmonicMap&, const HarmonicMap&) = default;

private:
    ComplexSeries h_;
    ComplexSeries g_;
};

struct Wirtinger {
    complex dz;     ///< w_z = h'(z)
    complex dzbar;  ///< w_zbar = conj(g'(z))
};

inline Wirtinger wirtinger(const HarmonicMap& w, complex z) {
    return {w.h().derivative_eval(z), std::conj(w.g().derivative_eval(z))};
}

/// e^{i alpha} w_z + e^{-i alpha} w_zbar.
inline complex directional_derivative(const HarmonicMap& w, complex z, double alpha) {
    const auto d = wirtinger(w, z);
    return std::polar(1.0, alpha) * d.dz + std::polar(1.0, -alpha) * d.dzbar;
}

struct DirectionalExtremes {
    double max;  ///< Lambda = |w_z| + |w_zbar|
    double min;  ///< lambda = | |w_z| - |w_zbar| |
};

inline DirectionalExtremes directional_extremes(const HarmonicMap& w, complex z) {
    const auto d = wirtinger(w, z);
    const double a = std::abs(d.dz);
    const double b = std::abs(d.dzbar);
    return {a + b, std::abs(a - b)};
}

inline double jacobian(const HarmonicMap& w, complex z) {
    const auto d = wirtinger(w, z);
    return std::norm(d.dz) - std::norm(d.dzbar);
}

/// Second complex dilatation g'/h'.
inline complex dilatation(const HarmonicMap& w, complex z) {
    const complex hp = w.h().derivative_eval(z);
    if (std::abs(hp) <= std::numeric_limits<double>::min()) {
        throw error(errc::critical_point, "w_z vanishes; dilatation undefined");
    }
    return w.g().derivative_eval(z) / hp;
}

/// Order p of a zero with its witnessing coefficients a_p = D^p h / p!,
/// b_p = D^p g / p! at the zero.
struct ZeroOrder {
    int p = 0;
    complex a_p;
    complex b_p;
    double lambda_p = 0.0;  ///< |a_p| + |b_p|
};

/// Zero order of w at z0. The map is recentered at z0 first. Tolerances are
/// relative to the largest coefficient of w as given: the tail of a long
/// truncated series grows under recentering and is no measure of size.
inline ZeroOrder zero_order_at(const HarmonicMap& w, complex z0, double tol = default_map_zero_tolerance) {
    if (!(tol > 0.0)) throw error(errc::domain, "zero tolerance must be positive");
    const HarmonicMap local = w.recentered(z0);
    const double scale = std::max(w.max_abs_coeff(), std::numeric_limits<double>::min());
    const complex value = local.h().coeff(0) + std::conj(local.g().coeff(0));
    if (std::abs(value) > tol * scale) {
        throw error(errc::not_a_zero, "|w(z0)| = " + std::to_string(std::abs(value)));
    }
    for (int k = 1; k <= local.truncation_order(); ++k) {
        const complex a = local.h().coeff(k);
        const complex b = local.g().coeff(k);
        const bool a_live = std::abs(a) > tol * scale;
        const bool b_live = std::abs(b) > tol * scale;
        if (!a_live && !b_live) continue;
        if (!(std::abs(b) < std::abs(a))) {
            throw error(errc::not_sense_preserving,
                        "order-" + std::to_string(k) + " coefficients violate |b_p| < |a_p|");
        }
        return {k, a, b_live ? b : complex{}, std::abs(a) + (b_live ? std::abs(b) : 0.0)};
    }
    throw error(errc::not_a_zero, "map vanishes identically to the truncation order");
}

/// Lambda_w^{(p)}(a) = |D^p h(a)/p!| + |D^p g(a)/p!|.
inline double coefficient_sum_at(const HarmonicMap& w, complex a, int p) {
    if (p < 0 || p > w.truncation_order()) throw error(errc::order_exceeds_truncation, "p exceeds truncation order");
    const HarmonicMap local = w.recentered(a);
    return std::abs(local.h().coeff(p)) + std::abs(local.g().coeff(p));
}

/// Radial-angular sample grid of {0 < |z| <= rmax}. Radius i (1-based) is
/// rmax * i / radii and angle j is 2 pi j / angles. The origin is not a node:
/// maps with a zero of order p >= 2 there have J(0) = 0.
struct GridSpec {
    int radii = 64;
    int angles = 256;
    double rmax = 0.999;

    void validate() const {
        if (radii < 1 || angles < 1) throw error(errc::domain, "grid needs at least one radius and angle");
        if (!(rmax > 0.0 && rmax <= 1.0)) throw error(errc::domain, "grid rmax must lie in (0, 1]");
    }

    int size() const noexcept { return radii * angles; }
    double radius(int i) const noexcept { return rmax * (i + 1) / radii; }
    double angle(int j) const noexcept { return 2.0 * pi * j / angles; }
    /// Node with flat index i * angles + j.
    complex node(int index) const noexcept { return std::polar(radius(index / angles), angle(index % angles)); }
};

struct SensePreservingReport {
    bool sense_preserving = true;
    double min_jacobian = std::numeric_limits<double>::infinity();
    complex argmin;
    int argmin_index = -1;
};

/// Grid certificate: J > 0 at every node.
inline SensePreservingReport is_sense_preserving(const HarmonicMap& w, const GridSpec& grid = {}) {
    grid.validate();
    SensePreservingReport report;
    for (int idx = 0; idx < grid.size(); ++idx) {
        const complex z = grid.node(idx);
        const double j = jacobian(w, z);
        if (j < report.min_jacobian) {
            report.min_jacobian = j;
            report.argmin = z;
            report.argmin_index = idx;
        }
    }
    report.sense_preserving = report.min_jacobian > 0.0;
    return report;
}

}  // namespace hschwarz

#pragma once

// Closed-form Schwarz-type bounds for analytic and harmonic self-maps of the
// unit disk with a zero of order p, and their boundary counterparts.
//
// Notation used throughout: s = |a_p| + |b_p| (or its transported version
// Lambda_w^{(p)}(a) (1 - |a|^2)^p), c = (pi/4) s, so that s = 4/pi is c = 1.

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "hschwarz/error.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/series.hpp"

namespace hschwarz {

/// Slack allowed above 4/pi before s is rejected; covers rounding in s only.
inline constexpr double coefficient_bound_slack = 1e-12;
inline constexpr double unit_modulus_tolerance = 1e-12;

namespace detail {

inline void require_order(int p) {
    if (p < 1) throw error(errc::domain, "zero order p must be >= 1");
}

inline void require_radius(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw error(errc::domain, "radius must lie in [0, 1]");
}

inline void require_coefficient_sum(double s) {
    if (!(s >= 0.0)) throw error(errc::domain, "coefficient sum s must be non-negative");
    if (s > four_over_pi + coefficient_bound_slack) {
        throw error(errc::coefficient_bound, "s = " + std::to_string(s) + " exceeds 4/pi");
    }
}

inline void require_unit(complex v, const char* name) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
        std::abs(std::abs(v) - 1.0) > unit_modulus_tolerance) {
        throw error(errc::domain, std::string(name) + " must have modulus 1");
    }
}

// 1 - r^m for r = 1 - h, without cancellation.
inline double one_minus_power(double h, int m) { return -std::expm1(m * std::log1p(-h)); }

}  // namespace detail

/// r^p (r + |a_p|) / (1 + |a_p| r): Schwarz-Pick bound for analytic self-maps
/// with a zero of order p at the origin.
inline double analytic_schwarz_pick_bound(int p, double ap_mod, double r) {
    detail::require_order(p);
    detail::require_radius(r);
    if (!(ap_mod >= 0.0 && ap_mod <= 1.0)) throw error(errc::domain, "|a_p| must lie in [0, 1]");
    return std::pow(r, p) * (r + ap_mod) / (1.0 + ap_mod * r);
}

/// (4/pi) arctan(r^p).
inline double classical_harmonic_bound(int p, double r) {
    detail::require_order(p);
    detail::require_radius(r);
    return four_over_pi * std::atan(std::pow(r, p));
}

/// (r + (pi/4) x) / (1 + (pi/4) x r); increasing in x for r < 1.
inline double moebius_ratio(double x, double r) {
    const double c = quarter_pi * x;
    return (r + c) / (1.0 + c * r);
}

/// M_p(r; s) = (4/pi) arctan[r^p (r + c) / (1 + c r)].
inline double improved_harmonic_bound(int p, double s, double r) {
    detail::require_order(p);
    detail::require_radius(r);
    detail::require_coefficient_sum(s);
    return four_over_pi * std::atan(std::pow(r, p) * moebius_ratio(s, r));
}

/// 1 - M_p(1 - h; s), evaluated without cancellation for small h.
inline double improved_harmonic_bound_complement(int p, double s, double h) {
    detail::require_order(p);
    detail::require_coefficient_sum(s);
    if (!(h >= 0.0 && h <= 1.0)) throw error(errc::domain, "distance to the boundary must lie in [0, 1]");
    const double r = 1.0 - h;
    const double c = quarter_pi * s;
    // 1 - x = [(1 - r^{p+1}) + c r (1 - r^{p-1})] / (1 + c r)
    const double x = std::pow(r, p) * moebius_ratio(s, r);
    const double one_minus_x =
        (detail::one_minus_power(h, p + 1) + c * r * detail::one_minus_power(h, p - 1)) / (1.0 + c * r);
    // pi/4 - arctan x = arctan((1 - x) / (1 + x))
    return four_over_pi * std::atan(one_minus_x / (1.0 + x));
}

/// 4/pi - (|a_n| + |b_n|); negative values would contradict the coefficient
/// bound for harmonic self-maps.
inline double coefficient_margin(const HarmonicMap& w, int n) {
    if (w.center() != complex{}) throw error(errc::canonicalization_required, "map must be expanded about 0");
    if (n < 1) throw error(errc::domain, "coefficient index must be >= 1");
    if (n > w.truncation_order()) throw error(errc::order_exceeds_truncation, "n exceeds truncation order");
    return four_over_pi - (std::abs(w.h().coeff(n)) + std::abs(w.g().coeff(n)));
}

/// (2/pi) [(p + 1) + c (p - 1)] / (1 + c): lower bound for
/// Re[w_z(1) + w_zbar(1)] when w(1) = 1.
inline double boundary_lower_bound(int p, double s) {
    detail::require_order(p);
    detail::require_coefficient_sum(s);
    const double c = quarter_pi * s;
    const double numerator = (p + 1) + c * (p - 1);
    const double denominator = 1.0 + c;
    return (2.0 / pi) * (numerator / denominator);
}

/// Closed form of lim_{r -> 1-} (1 - M_p(r; s)^2) / (1 - r).
inline double limit_slope(int p, double s) {
    detail::require_order(p);
    detail::require_coefficient_sum(s);
    const double c = quarter_pi * s;
    return four_over_pi * ((p + 1) + c * (p - 1)) / (1.0 + c);
}

struct LimitSlopeEstimate {
    double value = 0.0;
    std::vector<double> steps;        ///< h_k = 1 - r_k, k = 2..8
    std::vector<double> quotients;    ///< (1 - M^2(r_k)) / h_k
    std::vector<double> extrapolated; ///< one Richardson step on consecutive quotients
};

/// Difference quotients at r = 1 - 10^{-k}, k = 2..8, followed by one
/// Richardson step (step ratio 10, first-order error). The reported value is
/// the extrapolant whose neighbour agrees with it best.
inline LimitSlopeEstimate limit_slope_numeric(int p, double s) {
    detail::require_order(p);
    detail::require_coefficient_sum(s);
    LimitSlopeEstimate est;
    for (int k = 2; k <= 8; ++k) {
        const double r = 1.0 - std::pow(10.0, -k);
        const double h = 1.0 - r;  // exact: r is within a factor of two of 1
        const double tail = improved_harmonic_bound_complement(p, s, h);
        est.steps.push_back(h);
        est.quotients.push_back(tail * (2.0 - tail) / h);
    }
    for (std::size_t i = 0; i + 1 < est.quotients.size(); ++i) {
        est.extrapolated.push_back((10.0 * est.quotients[i + 1] - est.quotients[i]) / 9.0);
    }
    double best_gap = std::numeric_limits<double>::infinity();
    est.value = est.extrapolated.back();
    for (std::size_t i = 1; i < est.extrapolated.size(); ++i) {
        const double gap = std::abs(est.extrapolated[i] - est.extrapolated[i - 1]);
        if (gap < best_gap) {
            best_gap = gap;
            est.value = est.extrapolated[i];
        }
    }
    return est;
}

/// Inputs for the general boundary bound. `s` is the transported coefficient
/// sum Lambda_w^{(p)}(a) (1 - |a|^2)^p.
struct BoundQuery {
    int p = 1;
    double s = 0.0;
    double r = 0.0;
    complex a{};
    complex alpha{1.0, 0.0};
    complex beta{1.0, 0.0};
};

/// Poisson-kernel factor (1 - |a|^2) / |1 - conj(a) alpha|^2.
inline double poisson_kernel(complex a, complex alpha) {
    return (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * alpha);
}

/// Lower bound for Re(conj(beta) [w_z(alpha) alpha + w_zbar(alpha) conj(alpha)])
/// when w has a zero of order p at a and w(alpha) = beta on the circle.
inline double general_boundary_lower_bound(const BoundQuery& q) {
    detail::require_order(q.p);
    detail::require_coefficient_sum(q.s);
    if (!(std::abs(q.a) < 1.0)) throw error(errc::domain, "interior zero a must satisfy |a| < 1");
    detail::require_unit(q.alpha, "alpha");
    detail::require_unit(q.beta, "beta");
    const double c = quarter_pi * q.s;
    const double shape = ((q.p + 1) + c * (q.p - 1)) / (1.0 + c);
    return (2.0 / pi) * shape * poisson_kernel(q.a, q.alpha);
}

}  // namespace hschwarz

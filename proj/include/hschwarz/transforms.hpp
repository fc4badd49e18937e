#pragma once

// Disk automorphisms, the theta-projection of a harmonic map onto an analytic
// strip map, and the tangent transport from the strip |Re| < 1 to the disk.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "hschwarz/error.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/series.hpp"

namespace hschwarz {

/// phi_a(z) = (a - z) / (1 - conj(a) z). An involution of the disk swapping 0 and a.
class MobiusAutomorphism {
public:
    explicit MobiusAutomorphism(complex a) : a_(a) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(std::abs(a) < 1.0 - 1e-12)) {
            throw error(errc::domain, "automorphism parameter must satisfy |a| < 1");
        }
    }

    complex a() const noexcept { return a_; }

    complex operator()(complex z) const noexcept { return (a_ - z) / (1.0 - std::conj(a_) * z); }

    /// (|a|^2 - 1) / (1 - conj(a) z)^2
    complex derivative(complex z) const noexcept {
        const complex d = 1.0 - std::conj(a_) * z;
        return (std::norm(a_) - 1.0) / (d * d);
    }

    /// Taylor series about 0: a - (1 - |a|^2) sum_{k>=1} conj(a)^{k-1} z^k.
    ComplexSeries series(int order) const {
        if (order < 0) throw error(errc::domain, "truncation order must be non-negative");
        std::vector<complex> c(static_cast<std::size_t>(order) + 1);
        c[0] = a_;
        complex power = 1.0;
        const double scale = std::norm(a_) - 1.0;
        for (int k = 1; k <= order; ++k) {
            c[static_cast<std::size_t>(k)] = scale * power;
            power *= std::conj(a_);
        }
        return ComplexSeries(std::move(c));
    }

private:
    complex a_;
};

inline complex mobius_eval(const MobiusAutomorphism& m, complex z) { return m(z); }
inline complex mobius_derivative(const MobiusAutomorphism& m, complex z) { return m.derivative(z); }

/// W = w o phi_a as a series pair about 0: H = h o phi_a, G = g o phi_a.
/// h and g are first re-expanded about a; the result is exact through
/// `order` in the Taylor coefficients of W at 0.
inline HarmonicMap precompose_mobius(const HarmonicMap& w, complex a, int order) {
    if (w.center() != complex{}) throw error(errc::canonicalization_required, "map must be expanded about 0");
    if (order < 0 || order > w.truncation_order()) {
        throw error(errc::order_exceeds_truncation, "requested order exceeds the map's truncation");
    }
    const MobiusAutomorphism phi(a);
    const ComplexSeries inner = phi.series(order);
    const HarmonicMap local = w.recentered(a);
    return HarmonicMap(compose(local.h().truncated(order), inner), compose(local.g().truncated(order), inner));
}

/// f = h e^{-i theta} + g e^{i theta}, the analytic map with
/// Re f = Re(w e^{-i theta}) and f(0) = 0.
inline ComplexSeries projection(const HarmonicMap& w, double theta) {
    if (w.center() != complex{} || w.h().coeff(0) != complex{} || w.g().coeff(0) != complex{}) {
        throw error(errc::canonicalization_required, "projection needs h(0) = g(0) = 0 about the origin");
    }
    return std::polar(1.0, -theta) * w.h() + std::polar(1.0, theta) * w.g();
}

/// delta = tan((pi/4) f) as a truncated series. The tangent Maclaurin series
/// has radius pi/2; values of (pi/4) f stay well inside it while |Re f| < 1
/// and |Im f| is moderate.
inline ComplexSeries strip_to_disk(const ComplexSeries& f, int order = default_truncation_order) {
    if (std::abs(f.coeff(0)) > 1e-12 * std::max(1.0, f.max_abs_coeff())) {
        throw error(errc::normalization, "strip map must vanish at its center");
    }
    if (order < 0 || order > f.truncation_order()) {
        throw error(errc::order_exceeds_truncation, "requested order exceeds the series truncation");
    }
    std::vector<complex> c(f.coeffs().begin(), f.coeffs().begin() + order + 1);
    c[0] = 0.0;
    for (auto& v : c) v *= quarter_pi;
    return compose(tan_series(order), ComplexSeries(std::move(c), f.center()));
}

/// (e^{i pi f / 2} - 1) / (e^{i pi f / 2} + 1) for a strip value f; equals i tan(pi f / 4).
inline complex strip_cayley(complex f_value) {
    const complex e = std::exp(complex(0.0, 1.0) * (pi / 2.0) * f_value);
    return (e - 1.0) / (e + 1.0);
}

struct TangentHalfSides {
    double lhs;  ///< tan(|Re zeta| / 2)
    double rhs;  ///< |(e^{i zeta} - 1) / (e^{i zeta} + 1)|
};

/// Both sides of tan(|Re zeta|/2) <= |(e^{i zeta} - 1)/(e^{i zeta} + 1)| on |Re zeta| <= pi/2.
inline TangentHalfSides tangent_half_inequality(complex zeta) {
    if (!(std::abs(zeta.real()) <= pi / 2.0) || !std::isfinite(zeta.imag())) {
        throw error(errc::domain, "tangent half inequality needs |Re zeta| <= pi/2");
    }
    const complex e = std::exp(complex(0.0, 1.0) * zeta);
    return {std::tan(std::abs(zeta.real()) / 2.0), std::abs((e - 1.0) / (e + 1.0))};
}

}  // namespace hschwarz

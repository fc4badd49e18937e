#pragma once

// Truncated complex power series about a center, with composition, Taylor
// shifts and the Faa di Bruno partition engine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hschwarz/error.hpp"

namespace hschwarz {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double four_over_pi = 4.0 / pi;
inline constexpr double quarter_pi = pi / 4.0;

inline constexpr int default_truncation_order = 32;
inline constexpr int max_partition_size = 20;
inline constexpr double default_zero_tolerance = 1e-12;

/// Truncated power series sum_{k=0}^{N} c_k (z - center)^k.
///
/// Values are immutable once built; every operation below returns a new
/// series. The coefficient vector always holds truncation_order() + 1 finite
/// entries.
class ComplexSeries {
public:
    ComplexSeries() : coeffs_{complex{}} {}

    explicit ComplexSeries(std::vector<complex> coeffs, complex center = {})
        : center_(center), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw error(errc::domain, "series needs at least one coefficient");
        }
        if (!std::isfinite(center_.real()) || !std::isfinite(center_.imag())) {
            throw error(errc::domain, "series center is not finite");
        }
        for (const auto& c : coeffs_) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw error(errc::domain, "series coefficient is not finite");
            }
        }
    }

    ComplexSeries(std::initializer_list<complex> coeffs, complex center = {})
        : ComplexSeries(std::vector<complex>(coeffs), center) {}

    static ComplexSeries zero(int order, complex center = {}) {
        return ComplexSeries(std::vector<complex>(checked_size(order)), center);
    }

    static ComplexSeries constant(complex value, int order, complex center = {}) {
        std::vector<complex> c(checked_size(order));
        c[0] = value;
        return ComplexSeries(std::move(c), center);
    }

    /// z itself, written about `center`: center + (z - center).
    static ComplexSeries identity(int order, complex center = {}) {
        std::vector<complex> c(checked_size(std::max(order, 1)));
        c[0] = center;
        c[1] = 1.0;
        return ComplexSeries(std::move(c), center).truncated(order);
    }

    /// coefficient * (z - center)^power, zero-padded to `order`.
    static ComplexSeries monomial(complex coefficient, int power, int order, complex center = {}) {
        if (power < 0 || power > order) {
            throw error(errc::order_exceeds_truncation, "monomial power outside [0, order]");
        }
        std::vector<complex> c(checked_size(order));
        c[static_cast<std::size_t>(power)] = coefficient;
        return ComplexSeries(std::move(c), center);
    }

    complex center() const noexcept { return center_; }
    int truncation_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of (z - center)^k; zero beyond the truncation order.
    complex coeff(int k) const noexcept {
        return (k >= 0 && k <= truncation_order()) ? coeffs_[static_cast<std::size_t>(k)] : complex{};
    }

    double max_abs_coeff() const noexcept {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Horner evaluation.
    complex eval(complex z) const noexcept {
        const complex t = z - center_;
        complex acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    complex operator()(complex z) const noexcept { return eval(z); }

    /// D^k s(center) = k! c_k.
    complex derivative_at(int k) const {
        if (k < 0 || k > truncation_order()) {
            throw error(errc::order_exceeds_truncation,
                        "derivative order " + std::to_string(k) + " exceeds truncation order " +
                            std::to_string(truncation_order()));
        }
        double factorial = 1.0;
        for (int j = 2; j <= k; ++j) factorial *= j;
        return factorial * coeffs_[static_cast<std::size_t>(k)];
    }

    /// Formal derivative; the top coefficient is lost, so the order drops by
    /// one (never below zero).
    ComplexSeries derivative() const {
        if (truncation_order() == 0) return zero(0, center_);
        std::vector<complex> c(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = static_cast<double>(k) * coeffs_[k];
        return ComplexSeries(std::move(c), center_);
    }

    /// First derivative evaluated at z, without materialising the derived series.
    complex derivative_eval(complex z) const noexcept {
        const complex t = z - center_;
        complex acc{};
        for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
            acc = acc * t + static_cast<double>(k) * coeffs_[k];
        }
        return acc;
    }

    /// Drop or zero-pad coefficients to the given order.
    ComplexSeries truncated(int order) const {
        std::vector<complex> c(checked_size(order));
        const std::size_t n = std::min(c.size(), coeffs_.size());
        std::copy_n(coeffs_.begin(), n, c.begin());
        return ComplexSeries(std::move(c), center_);
    }

    /// Same coefficients conjugated; conj(s(conj z)) as a series about conj(center).
    ComplexSeries conjugated_coeffs() const {
        std::vector<complex> c(coeffs_.size());
        std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](complex v) { return std::conj(v); });
        return ComplexSeries(std::move(c), std::conj(center_));
    }

    /// Re-expansion about a new center (Taylor shift). Exact for the
    /// polynomial the coefficients represent, up to floating-point rounding.
    ComplexSeries recentered(complex new_center) const {
        const complex d = new_center - center_;
        std::vector<complex> c(coeffs_);
        const std::size_t n = c.size();
        if (d != complex{}) {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                for (std::size_t k = n - 1; k-- > i;) c[k] += d * c[k + 1];
            }
        }
        return ComplexSeries(std::move(c), new_center);
    }

    friend ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) {
        require_same_center(a, b);
        const int order = std::min(a.truncation_order(), b.truncation_order());
        std::vector<complex> c(checked_size(order));
        for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return ComplexSeries(std::move(c), a.center_);
    }

    friend ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) {
        return a + (-1.0) * b;
    }

    friend ComplexSeries operator*(complex scalar, const ComplexSeries& s) {
        std::vector<complex> c(s.coeffs_);
        for (auto& v : c) v *= scalar;
        return ComplexSeries(std::move(c), s.center_);
    }

    friend ComplexSeries operator*(const ComplexSeries& s, complex scalar) { return scalar * s; }

    /// Truncated Cauchy product, to the smaller of the two orders.
    friend ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b) {
        require_same_center(a, b);
        const int order = std::min(a.truncation_order(), b.truncation_order());
        std::vector<complex> c(checked_size(order));
        for (int i = 0; i <= order; ++i) {
            const complex ai = a.coeff(i);
            if (ai == complex{}) continue;
            for (int j = 0; i + j <= order; ++j) c[static_cast<std::size_t>(i + j)] += ai * b.coeff(j);
        }
        return ComplexSeries(std::move(c), a.center_);
    }

    friend bool operator==(const ComplexSeries&, const ComplexSeries&) = default;

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw error(errc::domain, "truncation order must be non-negative");
        return static_cast<std::size_t>(order) + 1;
    }

    static void require_same_center(const ComplexSeries& a, const ComplexSeries& b) {
        if (a.center_ != b.center_) throw error(errc::center_mismatch, "series have different centers");
    }

    complex center_{};
    std::vector<complex> coeffs_;
};

/// outer o inner about inner.center(), exact through the common truncation
/// order. Requires inner(inner.center) == outer.center() so that the
/// composition is a formal power series.
inline ComplexSeries compose(const ComplexSeries& outer, const ComplexSeries& inner) {
    const complex offset = inner.coeff(0) - outer.center();
    if (std::abs(offset) > 1e-12 * std::max(1.0, std::abs(outer.center()))) {
        throw error(errc::composition_domain, "inner series does not start at the outer center");
    }
    const int order = std::min(outer.truncation_order(), inner.truncation_order());

    // Horner in the series ring with t = inner - outer.center (no constant term).
    std::vector<complex> tc(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) tc[static_cast<std::size_t>(k)] = inner.coeff(k);
    const ComplexSeries t(std::move(tc), inner.center());

    ComplexSeries acc = ComplexSeries::constant(outer.coeff(order), order, inner.center());
    for (int k = order - 1; k >= 0; --k) {
        acc = acc * t + ComplexSeries::constant(outer.coeff(k), order, inner.center());
    }
    return acc;
}

/// Smallest k with |c_k| > tol, or nullopt when every coefficient is within
/// tolerance of zero.
inline std::optional<int> zero_order(const ComplexSeries& s, double tol = default_zero_tolerance) {
    if (!(tol > 0.0)) throw error(errc::domain, "zero_order tolerance must be positive");
    for (int k = 0; k <= s.truncation_order(); ++k) {
        if (std::abs(s.coeff(k)) > tol) return k;
    }
    return std::nullopt;
}

/// Maclaurin coefficients of tan z through `order`, from tan' = 1 + tan^2.
inline ComplexSeries tan_series(int order = default_truncation_order) {
    if (order < 0) throw error(errc::domain, "truncation order must be non-negative");
    std::vector<double> t(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 0; k < order; ++k) {
        double square = 0.0;
        for (int i = 0; i <= k; ++i) square += t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(k - i)];
        t[static_cast<std::size_t>(k + 1)] = ((k == 0 ? 1.0 : 0.0) + square) / (k + 1);
    }
    return ComplexSeries(std::vector<complex>(t.begin(), t.end()));
}

// ---------------------------------------------------------------------------
// Faa di Bruno
// ---------------------------------------------------------------------------

/// One summand index of the Faa di Bruno sum: multiplicities (k_1, ..., k_n)
/// with k_1 + 2 k_2 + ... + n k_n = n and weight n! / (k_1! ... k_n!).
struct PartitionTerm {
    std::vector<int> multiplicities;
    std::uint64_t multinomial_weight = 0;

    int size() const noexcept { return static_cast<int>(multiplicities.size()); }

    /// k_1 + ... + k_n, the order of the outer derivative the term uses.
    int parts() const noexcept {
        int total = 0;
        for (int k : multiplicities) total += k;
        return total;
    }

    friend bool operator==(const PartitionTerm&, const PartitionTerm&) = default;
};

namespace detail {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    // result * (n - k + i) is always divisible by i at this point.
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

// n! / (k_1! ... k_n!) = multinomial(n; k_1, ..., k_n, rest) * rest!, built
// as a product of binomials so that no intermediate exceeds the result.
inline std::uint64_t multinomial_weight(int n, const std::vector<int>& ks) {
    std::uint64_t weight = 1;
    int remaining = n;
    for (int k : ks) {
        weight *= binomial(remaining, k);
        remaining -= k;
    }
    for (int i = 2; i <= remaining; ++i) weight *= static_cast<std::uint64_t>(i);
    return weight;
}

inline void enumerate_partitions_into(int n, int part, int left, std::vector<int>& ks,
                                      std::vector<PartitionTerm>& out) {
    if (part == 0) {
        if (left == 0) out.push_back({ks, multinomial_weight(n, ks)});
        return;
    }
    for (int k = left / part; k >= 0; --k) {
        ks[static_cast<std::size_t>(part - 1)] = k;
        enumerate_partitions_into(n, part - 1, left - k * part, ks, out);
    }
    ks[static_cast<std::size_t>(part - 1)] = 0;
}

}  // namespace detail

/// Every multiplicity vector of weighted degree n, with exact weights.
inline std::vector<PartitionTerm> enumerate_partitions(int n) {
    if (n < 1 || n > max_partition_size) {
        throw error(errc::partition_cap, "partition size " + std::to_string(n) + " outside [1, 20]");
    }
    std::vector<PartitionTerm> out;
    std::vector<int> ks(static_cast<std::size_t>(n), 0);
    detail::enumerate_partitions_into(n, n, n, ks, out);
    return out;
}

/// D^n (m o q) at q's center, given outer_derivs[j - 1] = (D^j m)(q(center))
/// for j = 1..n.
inline complex faa_di_bruno(std::span<const complex> outer_derivs, const ComplexSeries& inner, int n) {
    if (n < 1) throw error(errc::partition_cap, "Faa di Bruno needs n >= 1");
    if (static_cast<int>(outer_derivs.size()) < n) {
        throw error(errc::arity, "need " + std::to_string(n) + " outer derivatives, got " +
                                     std::to_string(outer_derivs.size()));
    }
    if (inner.truncation_order() < n) {
        throw error(errc::order_exceeds_truncation, "inner series truncated below derivative order");
    }
    complex total{};
    for (const auto& term : enumerate_partitions(n)) {
        complex product = outer_derivs[static_cast<std::size_t>(term.parts() - 1)];
        for (int j = 1; j <= n; ++j) {
            const int k = term.multiplicities[static_cast<std::size_t>(j - 1)];
            if (k == 0) continue;
            // D^j q / j! is exactly the j-th coefficient.
            const complex base = inner.coeff(j);
            complex power = 1.0;
            for (int e = 0; e < k; ++e) power *= base;
            product *= power;
        }
        total += static_cast<double>(term.multinomial_weight) * product;
    }
    return total;
}

}  // namespace hschwarz

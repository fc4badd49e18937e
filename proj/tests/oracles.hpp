#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation paths; each oracle recomputes its value from first principles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using real50 = boost::multiprecision::cpp_bin_float_50;
using cplx = std::complex<double>;

inline real50 pi50() { return boost::multiprecision::atan(real50(1)) * 4; }

/// (4/pi) arctan[r^p (r + (pi/4)s)/(1 + (pi/4) s r)] in 50 digits.
inline double improved_bound(int p, double s, double r) {
    const real50 rr(r), c = pi50() / 4 * real50(s);
    const real50 x = boost::multiprecision::pow(rr, p) * (rr + c) / (1 + c * rr);
    return static_cast<double>(4 / pi50() * boost::multiprecision::atan(x));
}

/// 1 - M_p(r; s) in 50 digits, without the double rounding of M near 1.
inline double improved_bound_complement(int p, double s, double r) {
    const real50 rr(r), c = pi50() / 4 * real50(s);
    const real50 x = boost::multiprecision::pow(rr, p) * (rr + c) / (1 + c * rr);
    return static_cast<double>(1 - 4 / pi50() * boost::multiprecision::atan(x));
}

inline double schwarz_pick(int p, double ap, double r) {
    const real50 rr(r), a(ap);
    return static_cast<double>(boost::multiprecision::pow(rr, p) * (rr + a) / (1 + a * rr));
}

inline double classical(int p, double r) {
    return static_cast<double>(4 / pi50() * boost::multiprecision::atan(boost::multiprecision::pow(real50(r), p)));
}

inline double boundary(int p, double s) {
    const real50 c = pi50() / 4 * real50(s);
    return static_cast<double>(2 / pi50() * ((p + 1) + c * (p - 1)) / (1 + c));
}

/// (1 - M^2(r))/(1 - r) at r = 1 - h, in 50 digits; the limit as h -> 0 is
/// the boundary slope.
inline double slope_quotient(int p, double s, double h) {
    const real50 rr = 1 - real50(h), c = pi50() / 4 * real50(s);
    const real50 x = boost::multiprecision::pow(rr, p) * (rr + c) / (1 + c * rr);
    const real50 m = 4 / pi50() * boost::multiprecision::atan(x);
    return static_cast<double>((1 - m * m) / real50(h));
}

/// Every vector (k_1..k_n) with entries in [0, n] and sum j k_j = n, with
/// weight n!/(k_1!...k_n!) computed from factorials in 50-digit floats.
inline std::map<std::vector<int>, double> brute_force_partitions(int n) {
    std::map<std::vector<int>, double> out;
    std::vector<int> ks(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            int weighted = 0;
            for (int j = 0; j < n; ++j) weighted += (j + 1) * ks[static_cast<std::size_t>(j)];
            if (weighted != n) return;
            real50 w = 1;
            for (int i = 2; i <= n; ++i) w *= i;
            for (int k : ks)
                for (int i = 2; i <= k; ++i) w /= i;
            out[ks] = static_cast<double>(w);
            return;
        }
        for (int k = 0; k <= n; ++k) {
            ks[static_cast<std::size_t>(pos)] = k;
            rec(pos + 1);
        }
        ks[static_cast<std::size_t>(pos)] = 0;
    };
    // 0..n per slot is (n+1)^n vectors; keep n small
    rec(0);
    return out;
}

/// Integer partition numbers by the standard coin-change recurrence.
inline std::uint64_t partition_count(int n) {
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total) ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

/// Central difference of a function of a complex variable along a real direction.
inline cplx central_difference(const std::function<cplx(cplx)>& f, cplx z, cplx direction, double step) {
    return (f(z + step * direction) - f(z - step * direction)) / (2.0 * step);
}

/// Wirtinger derivatives from partial derivatives: w_z = (w_x - i w_y)/2, w_zbar = (w_x + i w_y)/2.
inline std::pair<cplx, cplx> wirtinger_fd(const std::function<cplx(cplx)>& f, cplx z, double step = 1e-5) {
    const cplx wx = central_difference(f, z, 1.0, step);
    const cplx wy = central_difference(f, z, cplx(0.0, 1.0), step);
    const cplx i(0.0, 1.0);
    return {(wx - i * wy) / 2.0, (wx + i * wy) / 2.0};
}

/// Coefficients of a polynomial given by its values, recovered by evaluating
/// derivatives through finite differences on a small circle (Cauchy integral
/// with N-point trapezoid rule, exact for polynomials of degree < N).
inline std::vector<cplx> taylor_by_cauchy(const std::function<cplx(cplx)>& f, cplx center, double radius, int count,
                                          int nodes = 64) {
    std::vector<cplx> out(static_cast<std::size_t>(count));
    const double tau = 2.0 * 3.14159265358979323846;
    for (int k = 0; k < count; ++k) {
        cplx acc{};
        for (int j = 0; j < nodes; ++j) {
            const cplx e = std::polar(1.0, tau * j / nodes);
            acc += f(center + radius * e) * std::pow(e, -k);
        }
        out[static_cast<std::size_t>(k)] = acc / (static_cast<double>(nodes) * std::pow(radius, k));
    }
    return out;
}

}  // namespace oracle

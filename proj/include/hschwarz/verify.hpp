#pragma once

// Grid verification of the interior and boundary bounds, the Moebius
// transport identities, the strip-to-disk transport and the coefficient bound.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "hschwarz/bounds.hpp"
#include "hschwarz/error.hpp"
#include "hschwarz/generate.hpp"
#include "hschwarz/harmonic.hpp"
#include "hschwarz/report.hpp"
#include "hschwarz/series.hpp"
#include "hschwarz/transforms.hpp"

namespace hschwarz {

inline constexpr double interior_tolerance = 1e-9;
inline constexpr double boundary_tolerance = 1e-6;
inline constexpr double identity_tolerance = 1e-8;
inline constexpr double vanishing_tolerance = 1e-9;
inline constexpr double algebraic_tolerance = 1e-9;
inline constexpr double witness_modulus_tolerance = 1e-9;
inline constexpr double finite_difference_tolerance = 1e-3;
inline constexpr double ordering_slack = 1e-12;
inline constexpr int strip_truncation_order = 128;

namespace inequality {
inline constexpr const char* interior = "lemma1.3";
inline constexpr const char* boundary = "theorem1.2";
inline constexpr const char* transport = "transport";
inline constexpr const char* strip = "strip";
inline constexpr const char* coefficient = "coefficient";
}  // namespace inequality

/// |w(z)| against M_p(|z|; |a_p| + |b_p|) at every grid node, with the
/// classical (4/pi) arctan r^p comparator and the ordering
/// M_p <= (4/pi) arctan r^p <= (4/pi) r^p.
inline VerificationReport check_interior_bound(const HarmonicMap& w, const GridSpec& grid = {},
                                               double tol = interior_tolerance, std::uint64_t seed = 0) {
    grid.validate();
    const ZeroOrder zero = zero_order_at(w, complex{});
    const double s = zero.lambda_p;

    VerificationReport report;
    report.inequality = inequality::interior;
    report.tolerance = tol;
    report.samples = 1;
    ReportRecord worst{inequality::interior, seed, zero.p, s};
    worst.margin = std::numeric_limits<double>::infinity();
    for (int idx = 0; idx < grid.size(); ++idx) {
        const int i = idx / grid.angles;
        const int j = idx % grid.angles;
        const double r = grid.radius(i);
        const double theta = grid.angle(j);
        const double attained = std::abs(w.eval(std::polar(r, theta)));
        const double improved = improved_harmonic_bound(zero.p, s, r);
        const double classical = classical_harmonic_bound(zero.p, r);
        const double power = four_over_pi * std::pow(r, zero.p);
        const double margin = improved - attained;
        report.observe(margin, seed, idx, r, theta);
        report.comparator_min_margin = std::min(report.comparator_min_margin, classical - attained);
        if (improved > classical + ordering_slack || classical > power + ordering_slack) ++report.ordering_violations;
        if (margin < worst.margin) {
            worst.grid_r = r;
            worst.grid_theta = theta;
            worst.attained = attained;
            worst.bound = improved;
            worst.margin = margin;
        }
    }
    report.records.push_back(worst);
    return report;
}

/// Everything computed at a boundary witness point.
struct BoundaryEvaluation {
    int p = 0;
    double s = 0.0;
    complex beta;
    double attained = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    std::vector<double> fd_quotients;  ///< radial quotients at steps 1e-3..1e-6
    double fd_relative_error = 0.0;    ///< best agreement over the steps
};

/// Re(conj(beta) [w_z(alpha) alpha + w_zbar(alpha) conj(alpha)]) against the
/// general boundary bound, with beta = w(alpha) and the zero of order p at a.
inline BoundaryEvaluation evaluate_boundary_theorem(const HarmonicMap& w, complex a, complex alpha) {
    const complex value = w.eval(alpha);
    if (std::abs(std::abs(value) - 1.0) > witness_modulus_tolerance) {
        throw error(errc::witness_invalid, "|w(alpha)| = " + std::to_string(std::abs(value)) + ", expected 1");
    }
    BoundaryEvaluation out;
    out.beta = value / std::abs(value);
    const ZeroOrder zero = zero_order_at(w, a);
    out.p = zero.p;
    out.s = zero.lambda_p * std::pow(1.0 - std::norm(a), zero.p);
    if (out.s > four_over_pi + coefficient_bound_slack) {
        throw error(errc::coefficient_bound, "transported coefficient sum exceeds 4/pi");
    }
    const auto d = wirtinger(w, alpha);
    out.attained = (std::conj(out.beta) * (d.dz * alpha + d.dzbar * std::conj(alpha))).real();
    out.bound = general_boundary_lower_bound({zero.p, out.s, 0.0, a, alpha / std::abs(alpha), out.beta});
    out.margin = out.attained - out.bound;

    out.fd_relative_error = std::numeric_limits<double>::infinity();
    for (double step : {1e-3, 1e-4, 1e-5, 1e-6}) {
        const complex inward = (1.0 - step) * alpha;
        const double quotient = (std::conj(out.beta) * (value - w.eval(inward)) / step).real();
        out.fd_quotients.push_back(quotient);
        const double rel = std::abs(quotient - out.attained) / std::max(std::abs(out.attained), 1e-300);
        out.fd_relative_error = std::min(out.fd_relative_error, rel);
    }
    return out;
}

inline VerificationReport check_boundary_theorem(const HarmonicMap& w, complex a, complex alpha,
                                                 double tol = boundary_tolerance, std::uint64_t seed = 0) {
    const BoundaryEvaluation e = evaluate_boundary_theorem(w, a, alpha);
    VerificationReport report;
    report.inequality = inequality::boundary;
    report.tolerance = tol;
    report.samples = 1;
    report.observe(e.margin, seed, 0, 1.0, std::arg(alpha));
    report.cross_check(e.fd_relative_error, finite_difference_tolerance);
    report.records.push_back({inequality::boundary, seed, e.p, e.s, 1.0, std::arg(alpha), e.attained, e.bound, e.margin});
    return report;
}

/// W = w o phi_a: zero order carried to the origin, vanishing of the lower
/// derivatives, and |H_p| + |G_p| = Lambda_w^{(p)}(a) (1 - |a|^2)^p.
inline VerificationReport check_transport_identities(const HarmonicMap& w, complex a,
                                                     double tol = identity_tolerance, std::uint64_t seed = 0) {
    VerificationReport report;
    report.inequality = inequality::transport;
    report.tolerance = tol;
    report.samples = 1;

    const ZeroOrder at_a = zero_order_at(w, a);
    const int p = at_a.p;
    const HarmonicMap transported = precompose_mobius(w, a, w.truncation_order());
    const double scale = std::max(1.0, transported.max_abs_coeff());

    // D^n W(0) and its conjugate part vanish for n < p (n = 0 is W(0) = w(a) = 0).
    double lower = 0.0;
    for (int n = 0; n < p; ++n) {
        lower = std::max(lower, std::abs(transported.h().derivative_at(n)));
        lower = std::max(lower, std::abs(transported.g().derivative_at(n)));
    }
    report.cross_check(lower / scale, vanishing_tolerance);

    int p0 = 0;
    try {
        p0 = zero_order_at(transported, complex{}).p;
    } catch (const error&) {
        p0 = -1;
    }
    report.cross_check(p0 == p ? 0.0 : 1.0, 0.0);

    const double shrink = std::pow(1.0 - std::norm(a), p);
    const double lhs = std::abs(transported.h().coeff(p)) + std::abs(transported.g().coeff(p));
    const double rhs = at_a.lambda_p * shrink;
    const double deviation = std::abs(lhs - rhs);
    report.observe(-deviation, seed, 0, std::abs(a), std::arg(a));

    // Per-part form: D^p H(0) = D^p h(a) phi'(0)^p, and the conjugate analogue.
    const double phi0 = std::pow(std::norm(a) - 1.0, p);
    report.cross_check(std::abs(transported.h().coeff(p) - at_a.a_p * phi0), tol);
    report.cross_check(std::abs(transported.g().coeff(p) - at_a.b_p * phi0), tol);

    report.records.push_back({inequality::transport, seed, p, rhs, std::abs(a), std::arg(a), lhs, rhs, -deviation});
    return report;
}

/// Strip-to-disk transport of f = projection(w, theta):
/// |delta| < 1 on the grid, mu(0, delta) = mu(0, f), D^p delta(0) = (pi/4) D^p f(0),
/// the Cayley form d = i delta, and |Re f| <= (4/pi) arctan of the analytic
/// Schwarz-Pick bound for delta.
inline VerificationReport check_strip_transport(const HarmonicMap& w, double theta, const GridSpec& grid,
                                                double tol = algebraic_tolerance, std::uint64_t seed = 0,
                                                int order = strip_truncation_order) {
    grid.validate();
    VerificationReport report;
    report.inequality = inequality::strip;
    report.tolerance = tol;
    report.samples = 1;

    const ComplexSeries f = projection(w.truncated_to(order), theta);
    const ComplexSeries delta = strip_to_disk(f, order);
    const double fscale = std::max(1.0, f.max_abs_coeff());
    const auto pf = zero_order(f, 1e-12 * fscale);
    const auto pd = zero_order(delta, 1e-12 * fscale);
    report.cross_check(pf && pd && *pf == *pd ? 0.0 : 1.0, 0.0);
    const int p = pf.value_or(1);
    const complex expected = quarter_pi * f.derivative_at(p);
    report.cross_check(std::abs(delta.derivative_at(p) - expected) / std::max(1.0, std::abs(expected)), tol);

    double factorial = 1.0;
    for (int k = 2; k <= p; ++k) factorial *= k;
    const double delta_p = std::abs(delta.derivative_at(p)) / factorial;

    ReportRecord worst{inequality::strip, seed, p, std::abs(f.coeff(p))};
    worst.margin = std::numeric_limits<double>::infinity();
    const int cayley_stride = std::max(1, grid.size() / 100);
    for (int idx = 0; idx < grid.size(); ++idx) {
        const complex z = grid.node(idx);
        const complex fz = f.eval(z);
        const complex dz = delta.eval(z);
        const double r = std::abs(z);
        const double margin = 1.0 - std::abs(dz);
        report.observe(margin, seed, idx, r, std::arg(z));
        if (margin < worst.margin) worst = {inequality::strip, seed, p, std::abs(f.coeff(p)), r, std::arg(z), std::abs(dz), 1.0, margin};
        if (idx % cayley_stride == 0) {
            report.cross_check(std::abs(strip_cayley(fz) - complex(0.0, 1.0) * dz), tol);
        }
        const double pipeline = four_over_pi * std::atan(analytic_schwarz_pick_bound(p, std::min(1.0, delta_p), r));
        report.comparator_min_margin = std::min(report.comparator_min_margin, pipeline - std::abs(fz.real()));
        if (std::abs(fz.real()) > pipeline + tol) ++report.ordering_violations;
    }
    report.records.push_back(worst);
    return report;
}

/// 4/pi - (|a_n| + |b_n|) for n = 1..nmax.
inline VerificationReport check_coefficient_bound(const HarmonicMap& w, int nmax = 16,
                                                  double tol = interior_tolerance, std::uint64_t seed = 0) {
    VerificationReport report;
    report.inequality = inequality::coefficient;
    report.tolerance = tol;
    report.samples = 1;
    ReportRecord worst{inequality::coefficient, seed, 0, 0.0};
    worst.margin = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= nmax; ++n) {
        const double margin = coefficient_margin(w, n);
        report.observe(margin, seed, n, 0.0, 0.0);
        if (margin < worst.margin) {
            const double s = std::abs(w.h().coeff(n)) + std::abs(w.g().coeff(n));
            worst = {inequality::coefficient, seed, n, s, 0.0, 0.0, s, four_over_pi, margin};
        }
    }
    report.records.push_back(worst);
    return report;
}

// ---------------------------------------------------------------------------
// Corpus runs
// ---------------------------------------------------------------------------

struct SuiteOptions {
    std::uint64_t seed = 42;
    int samples = 200;
    std::vector<int> orders{1, 2, 3};
    GridSpec grid{};
    double tol = interior_tolerance;
    int threads = 1;
};

/// Runs `task(i)` for i in [0, count) on up to `threads` workers and merges
/// the reports in index order, so the result is independent of scheduling.
inline VerificationReport run_parallel(int count, int threads,
                                       const std::function<VerificationReport(int)>& task) {
    std::vector<VerificationReport> parts(static_cast<std::size_t>(std::max(count, 0)));
    const int workers = std::clamp(threads, 1, std::max(count, 1));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = task(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (int i = next++; i < count; i = next++) parts[static_cast<std::size_t>(i)] = task(i);
                } catch (...) {
                    failures[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& f : failures) {
            if (f) std::rethrow_exception(f);
        }
    }
    VerificationReport total;
    for (auto& part : parts) total = merge(std::move(total), part);
    return total;
}

/// Sample i of order p uses seed `base + i` and degree p + (i mod 5).
inline SampleSpec corpus_spec(std::uint64_t base, int p, int i) {
    SampleSpec spec;
    spec.seed = base + static_cast<std::uint64_t>(i);
    spec.p = p;
    spec.degree = p + i % 5;
    return spec;
}

inline VerificationReport run_interior_suite(const SuiteOptions& opt) {
    VerificationReport total;
    for (int p : opt.orders) {
        auto part = run_parallel(opt.samples, opt.threads, [&](int i) {
            const SampleSpec spec = corpus_spec(opt.seed, p, i);
            return check_interior_bound(generate(spec), opt.grid, opt.tol, spec.seed);
        });
        total = merge(std::move(total), part);
    }
    total.inequality = inequality::interior;
    total.tolerance = opt.tol;
    return total;
}

/// Zero location for odd-numbered witnesses: |a| <= 0.5, uniform angle.
inline complex corpus_zero(std::uint64_t seed) {
    Xorshift64Star rng(splitmix64(seed ^ 0x5A17ULL));
    return std::polar(0.5 * std::sqrt(rng.uniform()), 2.0 * pi * rng.uniform());
}

/// Normalised polynomial witnesses (zero at 0 for even i, inside |a| <= 0.5
/// for odd i), followed by the closed forms z^p and the Moebius factors
/// (z - a)/(1 - a z) for a in {0, 0.3, 0.5, 0.8}.
inline VerificationReport run_boundary_suite(const SuiteOptions& opt) {
    VerificationReport total;
    for (int p : opt.orders) {
        auto part = run_parallel(opt.samples, opt.threads, [&](int i) {
            SampleSpec spec = corpus_spec(opt.seed, p, i);
            spec.normalization = Normalization::boundary;
            if (i % 2 == 1) spec.zero = corpus_zero(spec.seed);
            const Sample sample = generate_sample(spec);
            return check_boundary_theorem(sample.map, sample.zero, sample.alpha, opt.tol, spec.seed);
        });
        total = merge(std::move(total), part);
        total = merge(std::move(total),
                      check_boundary_theorem(HarmonicMap::analytic(ComplexSeries::monomial(1.0, p, std::max(p, 1))),
                                             complex{}, complex(1.0), opt.tol, 0));
    }
    for (double a : {0.0, 0.3, 0.5, 0.8}) {
        SampleSpec spec;
        spec.family = SampleFamily::mobius_witness;
        spec.zero = a;
        // seed chosen so that the rotation is irrelevant: the check is rotation invariant
        spec.seed = opt.seed;
        const Sample sample = generate_sample(spec);
        total = merge(std::move(total), check_boundary_theorem(sample.map, sample.zero, sample.alpha, opt.tol, spec.seed));
    }
    total.inequality = inequality::boundary;
    total.tolerance = opt.tol;
    return total;
}

/// Polynomial samples with the zero placed at a (|a| <= 0.5), then carried
/// back to the origin by phi_a.
inline VerificationReport run_transport_suite(const SuiteOptions& opt) {
    VerificationReport total;
    for (int p : opt.orders) {
        auto part = run_parallel(opt.samples, opt.threads, [&](int i) {
            SampleSpec spec = corpus_spec(opt.seed, p, i);
            spec.zero = corpus_zero(spec.seed);
            const Sample sample = generate_sample(spec);
            return check_transport_identities(sample.map, sample.zero, opt.tol, spec.seed);
        });
        total = merge(std::move(total), part);
    }
    total.inequality = inequality::transport;
    total.tolerance = opt.tol;
    return total;
}

/// f = projection(w, theta) of a polynomial sample, theta drawn from the seed.
inline VerificationReport run_strip_suite(const SuiteOptions& opt) {
    VerificationReport total;
    for (int p : opt.orders) {
        auto part = run_parallel(opt.samples, opt.threads, [&](int i) {
            const SampleSpec spec = corpus_spec(opt.seed, p, i);
            Xorshift64Star rng(splitmix64(spec.seed ^ 0x7E7AULL));
            const double theta = 2.0 * pi * rng.uniform();
            return check_strip_transport(generate(spec), theta, opt.grid, opt.tol, spec.seed);
        });
        total = merge(std::move(total), part);
    }
    total.inequality = inequality::strip;
    total.tolerance = opt.tol;
    return total;
}

inline VerificationReport run_coefficient_suite(const SuiteOptions& opt, int nmax = 16) {
    VerificationReport total;
    for (int p : opt.orders) {
        auto part = run_parallel(opt.samples, opt.threads, [&](int i) {
            SampleSpec spec = corpus_spec(opt.seed, p, i);
            spec.family = SampleFamily::poisson_extension;
            return check_coefficient_bound(generate(spec), nmax, opt.tol, spec.seed);
        });
        total = merge(std::move(total), part);
    }
    total.inequality = inequality::coefficient;
    total.tolerance = opt.tol;
    return total;
}

}  // namespace hschwarz

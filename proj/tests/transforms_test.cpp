#include "hschwarz/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hschwarz/random.hpp"
#include "oracles.hpp"

using namespace hschwarz;

namespace {

const complex I{0.0, 1.0};

HarmonicMap map_of(std::vector<complex> h, std::vector<complex> g, int order = 12) {
    h.resize(static_cast<std::size_t>(order) + 1);
    g.resize(static_cast<std::size_t>(order) + 1);
    return HarmonicMap(ComplexSeries(std::move(h)), ComplexSeries(std::move(g)));
}

// h = (z - a)^2 (1 + 0.3 z), g = 0.2 (z - a)^2 (1 - 0.1 z), expanded about 0.
HarmonicMap double_zero_at(complex a) {
    const ComplexSeries sq({a * a, -2.0 * a, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const ComplexSeries hf({1.0, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const ComplexSeries gf({0.2, -0.02, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    return HarmonicMap(sq * hf, sq * gf);
}

}  // namespace

TEST(Mobius, Examples) {
    const MobiusAutomorphism m(complex(0.3, -0.4));
    EXPECT_NEAR(std::abs(mobius_eval(m, m.a())), 0.0, 1e-16);
    EXPECT_EQ(mobius_eval(m, 0.0), m.a());
    EXPECT_NEAR(std::abs(mobius_derivative(MobiusAutomorphism(0.5), 0.0) - (-0.75)), 0.0, 1e-16);
    for (complex z : {complex(0.0), complex(0.3, 0.6), complex(-0.9, 0.0)}) {
        EXPECT_EQ(MobiusAutomorphism(0.0).derivative(z), complex(-1.0));
    }
    // eta(1) for a = 0.5 lies on the circle at -1
    EXPECT_NEAR(std::abs(MobiusAutomorphism(0.5)(1.0) - (-1.0)), 0.0, 1e-16);
}

TEST(Mobius, InvolutionAndDerivative) {
    Xorshift64Star rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const MobiusAutomorphism m(std::polar(0.95 * std::sqrt(rng.uniform()), 2.0 * pi * rng.uniform()));
        const complex z = std::polar(0.95 * std::sqrt(rng.uniform()), 2.0 * pi * rng.uniform());
        EXPECT_LT(std::abs(m(m(z)) - z), 1e-13);
        const auto [fd, unused] = oracle::wirtinger_fd([&](complex u) { return m(u); }, z, 1e-6);
        (void)unused;
        EXPECT_LT(std::abs(m.derivative(z) - fd), 1e-6 * std::max(1.0, std::abs(fd)));
        EXPECT_LT(std::abs(m(z)), 1.0);
    }
}

TEST(Mobius, SeriesMatchesValues) {
    const MobiusAutomorphism m(complex(0.4, 0.2));
    const auto s = m.series(80);
    for (complex z : {complex(0.1, 0.1), complex(-0.5, 0.2)}) EXPECT_LT(std::abs(s.eval(z) - m(z)), 1e-14);
}

TEST(Mobius, DomainErrors) {
    EXPECT_THROW(MobiusAutomorphism(1.0), error);
    EXPECT_THROW(MobiusAutomorphism(complex(0.8, 0.8)), error);
    const auto w = map_of({0.0, 1.0}, {});
    EXPECT_THROW((void)precompose_mobius(w, 1.0, 4), error);
}

TEST(Precompose, AtOriginReflects) {
    const auto w = map_of({0.0, 1.0, 0.5, complex(0.0, 0.2)}, {0.0, 0.1, 0.0, 0.3});
    const auto W = precompose_mobius(w, 0.0, 12);
    for (int k = 0; k <= 12; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        EXPECT_EQ(W.h().coeff(k), sign * w.h().coeff(k));
        EXPECT_EQ(W.g().coeff(k), sign * w.g().coeff(k));
    }
    EXPECT_NEAR(std::abs(W.eval(complex(0.2, 0.3)) - w.eval(complex(-0.2, -0.3))), 0.0, 1e-16);
}

TEST(Precompose, TransportsZeroOfOrderTwo) {
    const auto w = double_zero_at(0.5);
    const auto W = precompose_mobius(w, 0.5, 7);
    EXPECT_EQ(zero_order_at(w, 0.5).p, 2);
    const auto z = zero_order_at(W, 0.0);
    EXPECT_EQ(z.p, 2);
    EXPECT_LT(std::abs(W.h().coeff(0)) + std::abs(W.h().coeff(1)), 1e-14);

    const auto local = w.h().recentered(0.5);
    EXPECT_NEAR(std::abs(W.h().coeff(2) - local.coeff(2) * 0.5625), 0.0, 1e-9);
    // conjugate part, symmetric rule: phi'(0) real here
    EXPECT_NEAR(std::abs(W.g().coeff(2) - w.g().recentered(0.5).coeff(2) * 0.5625), 0.0, 1e-9);
}

TEST(Precompose, ValuesAgreePointwise) {
    const complex a(0.2, -0.3);
    const auto w = double_zero_at(a);
    const auto W = precompose_mobius(w, a, 7);
    const MobiusAutomorphism phi(a);
    EXPECT_NEAR(std::abs(W.eval(0.0) - w.eval(a)), 0.0, 1e-15);
    // W is exact through order 7; compare near 0 where the truncation tail is tiny.
    for (complex z : {complex(0.01, 0.02), complex(-0.02, 0.01)}) EXPECT_LT(std::abs(W.eval(z) - w.eval(phi(z))), 1e-10);
}

TEST(Precompose, PreservesSensePreservation) {
    const auto w = double_zero_at(complex(0.1, 0.2));
    const GridSpec grid{16, 64, 0.4};
    ASSERT_TRUE(is_sense_preserving(w, grid).sense_preserving);
    const auto W = precompose_mobius(w, complex(0.1, 0.2), 7);
    // W = w o phi near 0; phi maps |z| <= 0.1 into a neighbourhood of a where w is sense-preserving
    const GridSpec inner{8, 64, 0.1};
    const auto rep = is_sense_preserving(W, inner);
    EXPECT_TRUE(rep.sense_preserving);
    // |W_z| - |W_zbar| = (|w_z| - |w_zbar|)(phi) |phi'|
    const MobiusAutomorphism phi(complex(0.1, 0.2));
    for (int idx = 0; idx < inner.size(); idx += 37) {
        const complex z = inner.node(idx);
        const auto dW = directional_extremes(W, z);
        const auto dw = directional_extremes(w, phi(z));
        EXPECT_NEAR(dW.min, dw.min * std::abs(phi.derivative(z)), 1e-8);
    }
}

TEST(Projection, Examples) {
    const auto w = map_of({0.0, 1.0, 0.2}, {0.0, 0.3, complex(0.0, 0.1)});
    const auto f0 = projection(w, 0.0);
    for (int k = 0; k <= 12; ++k) EXPECT_EQ(f0.coeff(k), w.h().coeff(k) + w.g().coeff(k));

    const auto v = map_of({0.0, 0.0, 1.0}, {0.0, 0.0, 0.5});
    const auto f = projection(v, pi / 2.0);
    EXPECT_NEAR(std::abs(f.coeff(2) - complex(0.0, -0.5)), 0.0, 1e-16);
    Xorshift64Star rng(50);
    for (int i = 0; i < 50; ++i) {
        const complex z = std::polar(std::sqrt(rng.uniform()), 2.0 * pi * rng.uniform());
        EXPECT_NEAR(f.eval(z).real(), (-I * v.eval(z)).real(), 1e-12);
    }
    EXPECT_THROW((void)projection(map_of({0.1, 1.0}, {}), 0.3), error);
}

TEST(StripToDisk, Examples) {
    const auto d1 = strip_to_disk(ComplexSeries({0.0, 1.0, 0.0, 0.0, 0.0, 0.0}), 5);
    EXPECT_NEAR(d1.derivative_at(1).real(), quarter_pi, 1e-16);

    const auto d3 = strip_to_disk(ComplexSeries({0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0}), 7);
    EXPECT_EQ(d3.coeff(1), complex{});
    EXPECT_EQ(d3.coeff(2), complex{});
    EXPECT_NEAR(d3.coeff(3).real(), quarter_pi, 1e-16);
    EXPECT_NEAR(d3.derivative_at(3).real(), 6.0 * quarter_pi, 1e-15);

    try {
        (void)strip_to_disk(ComplexSeries({0.5, 1.0}), 1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::normalization);
    }
}

TEST(StripToDisk, ValuesAgreeWithTangent) {
    const ComplexSeries f({0.0, complex(0.6, 0.1), complex(-0.1, 0.2), 0.05, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                           0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const auto d = strip_to_disk(f, 32);
    for (complex z : {complex(0.1, 0.0), complex(0.2, -0.3), complex(-0.4, 0.1)}) {
        EXPECT_LT(std::abs(d.eval(z) - std::tan(quarter_pi * f.eval(z))), 1e-12);
        EXPECT_LT(std::abs(strip_cayley(f.eval(z)) - I * d.eval(z)), 1e-12);
    }
}

TEST(TangentHalf, Examples) {
    for (double x : {-1.5, -0.4, 0.0, 0.7, pi / 2.0}) {
        const auto t = tangent_half_inequality(x);
        EXPECT_NEAR(t.lhs, t.rhs, 1e-15);
        EXPECT_NEAR(t.lhs, std::tan(std::abs(x) / 2.0), 1e-15);
    }
    const auto t = tangent_half_inequality(complex(0.0, 0.8));
    EXPECT_EQ(t.lhs, 0.0);
    EXPECT_GE(t.rhs, 0.0);
    EXPECT_THROW((void)tangent_half_inequality(complex(1.6, 0.0)), error);
}

TEST(TangentHalf, HoldsOnRandomStripPoints) {
    Xorshift64Star rng(8);
    for (int i = 0; i < 10000; ++i) {
        const complex zeta(rng.uniform(-pi / 2.0, pi / 2.0), rng.uniform(-5.0, 5.0));
        const auto t = tangent_half_inequality(zeta);
        EXPECT_LE(t.lhs, t.rhs * (1.0 + 1e-14) + 1e-15);
    }
}

#include "hschwarz/harmonic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hschwarz/random.hpp"
#include "oracles.hpp"

using namespace hschwarz;

namespace {

ComplexSeries poly(std::vector<complex> c, int order = 8) {
    c.resize(static_cast<std::size_t>(order) + 1);
    return ComplexSeries(std::move(c));
}

HarmonicMap map_of(std::vector<complex> h, std::vector<complex> g, int order = 8) {
    return HarmonicMap(poly(std::move(h), order), poly(std::move(g), order));
}

const complex I{0.0, 1.0};

}  // namespace

TEST(HarmonicEval, Examples) {
    const complex z(0.3, 0.4);
    EXPECT_EQ(map_of({0.0, 1.0}, {}).eval(z), z);
    EXPECT_EQ(map_of({}, {0.0, 1.0}).eval(z), std::conj(z));
    EXPECT_NEAR(std::abs(map_of({0.0, 0.0, 1.0}, {0.0, 0.0, 0.5}).eval(0.5) - 0.375), 0.0, 1e-16);
}

TEST(HarmonicMapCtor, CenterMismatch) {
    try {
        HarmonicMap(ComplexSeries({0.0, 1.0}), ComplexSeries({0.0, 1.0}, 0.1));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::center_mismatch);
    }
}

TEST(HarmonicMapCtor, Canonicalization) {
    const auto w = map_of({0.2, 1.0}, {complex(0.1, 0.3), 0.5});
    const auto c = w.canonicalized();
    EXPECT_TRUE(c.is_canonical());
    EXPECT_FALSE(w.is_canonical());
    for (complex z : {complex(0.1, 0.2), complex(-0.5, 0.3)}) EXPECT_NEAR(std::abs(c.eval(z) - w.eval(z)), 0.0, 1e-15);
}

TEST(Wirtinger, Examples) {
    const auto id = map_of({0.0, 1.0}, {});
    for (complex z : {complex(0.0), complex(0.3, -0.7)}) {
        const auto d = wirtinger(id, z);
        EXPECT_EQ(d.dz, complex(1.0));
        EXPECT_EQ(d.dzbar, complex(0.0));
    }
    const auto d = wirtinger(map_of({0.0, 0.0, 1.0}, {0.0, 0.0, 0.5}), 1.0);
    EXPECT_EQ(d.dz, complex(2.0));
    EXPECT_EQ(d.dzbar, complex(1.0));
}

TEST(Wirtinger, MatchesFiniteDifferences) {
    Xorshift64Star rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<complex> h(6), g(6);
        for (int k = 1; k < 6; ++k) {
            h[static_cast<std::size_t>(k)] = 0.5 * rng.complex_normal();
            g[static_cast<std::size_t>(k)] = 0.5 * rng.complex_normal();
        }
        const auto w = map_of(h, g);
        const complex z = std::polar(0.8 * rng.uniform(), 2.0 * pi * rng.uniform());
        const auto [fz, fzbar] = oracle::wirtinger_fd([&](complex u) { return w.eval(u); }, z);
        const auto d = wirtinger(w, z);
        EXPECT_LT(std::abs(d.dz - fz), 1e-8);
        EXPECT_LT(std::abs(d.dzbar - fzbar), 1e-8);
    }
}

TEST(DirectionalExtremes, Examples) {
    const auto a = directional_extremes(map_of({0.0, 1.0}, {}), complex(0.2, 0.1));
    EXPECT_DOUBLE_EQ(a.max, 1.0);
    EXPECT_DOUBLE_EQ(a.min, 1.0);
    const auto b = directional_extremes(map_of({0.0, 1.0}, {0.0, 0.5}), complex(0.2, 0.1));
    EXPECT_DOUBLE_EQ(b.max, 1.5);
    EXPECT_DOUBLE_EQ(b.min, 0.5);
}

TEST(DirectionalExtremes, BracketSampledDirections) {
    const auto w = map_of({0.0, 1.0, complex(0.3, 0.2)}, {0.0, complex(0.1, -0.2), 0.25});
    for (complex z : {complex(0.1, 0.2), complex(-0.6, 0.3), complex(0.0, -0.9)}) {
        const auto ext = directional_extremes(w, z);
        double hi = 0.0, lo = 1e300;
        for (int k = 0; k < 720; ++k) {
            const double m = std::abs(directional_derivative(w, z, 2.0 * pi * k / 720.0));
            hi = std::max(hi, m);
            lo = std::min(lo, m);
            EXPECT_LE(m, ext.max * (1.0 + 1e-14));
            EXPECT_GE(m, ext.min * (1.0 - 1e-14));
        }
        EXPECT_NEAR(hi, ext.max, 1e-4 * ext.max);
        EXPECT_NEAR(lo, ext.min, 1e-4 * ext.max);
    }
}

TEST(Jacobian, ExamplesAndProductIdentity) {
    EXPECT_DOUBLE_EQ(jacobian(map_of({0.0, 1.0}, {}), 0.3), 1.0);
    EXPECT_DOUBLE_EQ(jacobian(map_of({0.0, 1.0}, {0.0, 1.0}), 0.3), 0.0);
    const auto w = map_of({0.0, 1.0, 0.4}, {0.0, 0.2, complex(0.0, 0.3)});
    for (complex z : {complex(0.1, 0.2), complex(-0.5, 0.5)}) {
        const auto ext = directional_extremes(w, z);
        EXPECT_NEAR(std::abs(jacobian(w, z)), ext.max * ext.min, 1e-14);
    }
}

TEST(Dilatation, Examples) {
    const auto w = map_of({0.0, 1.0}, {0.0, 0.0, 0.5});
    for (complex z : {complex(0.0), complex(0.3, 0.4), complex(-0.2, 0.1)}) EXPECT_NEAR(std::abs(dilatation(w, z) - z), 0.0, 1e-16);
    EXPECT_EQ(dilatation(map_of({0.0, 1.0}, {}), 0.4), complex(0.0));
    try {
        (void)dilatation(map_of({0.0, 0.0, 1.0}, {}), 0.0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::critical_point);
    }
}

TEST(ZeroOrderAt, Examples) {
    const auto a = zero_order_at(map_of({0.0, 0.0, 1.0}, {0.0, 0.0, 0.5}), 0.0);
    EXPECT_EQ(a.p, 2);
    EXPECT_EQ(a.a_p, complex(1.0));
    EXPECT_EQ(a.b_p, complex(0.5));
    EXPECT_DOUBLE_EQ(a.lambda_p, 1.5);

    const auto b = zero_order_at(map_of({0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 0.0, 0.0, 0.0, 1.0}), 0.0);
    EXPECT_EQ(b.p, 3);
    EXPECT_EQ(b.b_p, complex(0.0));
}

TEST(ZeroOrderAt, RecenteredMatchesCauchyOracle) {
    // h = (z - 0.2)^2, g = 0.1 (z - 0.2)^3 expanded about 0
    auto shifted_power = [](double scale, int n) {
        std::vector<complex> c(9);
        for (int k = 0; k <= n; ++k) {
            double binom = 1.0;
            for (int i = 1; i <= k; ++i) binom = binom * (n - i + 1) / i;
            c[static_cast<std::size_t>(k)] = scale * binom * std::pow(-0.2, n - k);
        }
        return ComplexSeries(std::move(c));
    };
    const HarmonicMap w(shifted_power(1.0, 2), shifted_power(0.1, 3));
    const auto z = zero_order_at(w, 0.2);
    EXPECT_EQ(z.p, 2);

    const auto hc = oracle::taylor_by_cauchy([&](complex u) { return w.h().eval(u); }, 0.2, 0.1, 4);
    const auto gc = oracle::taylor_by_cauchy([&](complex u) { return w.g().eval(u); }, 0.2, 0.1, 4);
    EXPECT_NEAR(std::abs(z.a_p - hc[2]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z.b_p - gc[2]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(hc[2] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gc[3] - 0.1), 0.0, 1e-12);
}

TEST(ZeroOrderAt, Errors) {
    try {
        (void)zero_order_at(map_of({0.1, 1.0}, {}), 0.0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_a_zero);
    }
    try {
        (void)zero_order_at(map_of({0.0, 0.5}, {0.0, 1.0}), 0.0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_sense_preserving);
    }
}

TEST(CoefficientSum, RecenteredValues) {
    const auto w = map_of({0.0, 1.0, 1.0}, {0.0, 0.0, 0.5});
    // at a = 0.5: h'(a)=2, g'(a)=0.5
    EXPECT_NEAR(coefficient_sum_at(w, 0.5, 1), 2.5, 1e-15);
    EXPECT_NEAR(coefficient_sum_at(w, 0.5, 2), 1.5, 1e-15);
}

TEST(SensePreserving, Examples) {
    const auto id = is_sense_preserving(map_of({0.0, 1.0}, {}));
    EXPECT_TRUE(id.sense_preserving);
    EXPECT_DOUBLE_EQ(id.min_jacobian, 1.0);

    const auto w = map_of({0.0, 1.0}, {0.0, 0.0, 1.0});
    EXPECT_TRUE(is_sense_preserving(w, {16, 64, 0.49}).sense_preserving);
    const auto bad = is_sense_preserving(w, {16, 64, 0.6});
    EXPECT_FALSE(bad.sense_preserving);
    // oracle: J = 1 - |2z|^2
    EXPECT_NEAR(bad.min_jacobian, 1.0 - 4.0 * 0.36, 1e-14);
    EXPECT_NEAR(std::abs(bad.argmin), 0.6, 1e-14);
}

TEST(SensePreserving, VerdictMonotoneInRadius) {
    const auto w = map_of({0.0, 1.0}, {0.0, 0.0, 1.0});
    bool seen_false = false;
    for (int i = 1; i <= 40; ++i) {
        const double rmax = i / 40.0;
        const bool ok = is_sense_preserving(w, {8, 32, rmax}).sense_preserving;
        EXPECT_EQ(ok, 2.0 * rmax < 1.0) << rmax;
        if (!ok) seen_false = true;
        if (seen_false) {
            EXPECT_FALSE(ok);
        }
    }
}

TEST(GridSpec, Nodes) {
    const GridSpec g{4, 8, 0.8};
    EXPECT_EQ(g.size(), 32);
    EXPECT_DOUBLE_EQ(g.radius(0), 0.2);
    EXPECT_DOUBLE_EQ(g.radius(3), 0.8);
    EXPECT_NEAR(std::abs(g.node(31) - std::polar(0.8, 2.0 * pi * 7 / 8)), 0.0, 1e-15);
    EXPECT_THROW((GridSpec{0, 8, 0.5}.validate()), error);
    EXPECT_THROW((GridSpec{4, 8, 1.5}.validate()), error);
}

TEST(ScaledMap, MultipliesValues) {
    const auto w = map_of({0.0, 1.0, 0.2}, {0.0, 0.3, I});
    const complex f = std::polar(0.7, 1.1);
    const auto s = w.scaled(f);
    for (complex z : {complex(0.2, 0.1), complex(-0.4, -0.6)}) EXPECT_NEAR(std::abs(s.eval(z) - f * w.eval(z)), 0.0, 1e-15);
}

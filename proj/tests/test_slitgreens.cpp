#include <gtest/gtest.h>

#include <cmath>

#include "tilinglab/error.hpp"
#include "tilinglab/slitgreens.hpp"

using namespace tilinglab;

TEST(SlitGreens, BoundaryAndSource) {
    SlitBox box(64);
    SlitField g = slit_greens(box);
    EXPECT_TRUE(g.solve.converged);
    for (int x = -64; x <= -1; ++x) EXPECT_EQ(g(x, 0), 0.0);
    for (int t = -64; t <= 64; ++t) {
        EXPECT_EQ(g(64, t), 0.0);
        EXPECT_EQ(g(t, -64), 0.0);
    }
    // Delta G = delta_0 with Delta = neighbours - 4
    auto lap = [&](int x, int y) { return g(x + 1, y) + g(x - 1, y) + g(x, y + 1) + g(x, y - 1) - 4 * g(x, y); };
    EXPECT_NEAR(lap(0, 0), 1, 1e-9);
    for (auto [x, y] : {std::pair{1, 0}, {0, 1}, {-3, 2}, {10, -7}, {-63, 1}, {63, 63}}) EXPECT_NEAR(lap(x, y), 0, 1e-9);
    EXPECT_LT(g(0, 0), 0);
}

TEST(SlitGreens, SymmetryAndDecay) {
    SlitField g = slit_greens(SlitBox(64));
    for (int y = 1; y < 64; y += 7)
        for (int x = -60; x < 64; x += 9) EXPECT_NEAR(g(x, y), g(x, -y), 1e-12);
    for (int x = 3; x < 64; ++x) EXPECT_LT(std::abs(g(x, 0)), std::abs(g(x - 1, 0)));
}

TEST(SlitGreens, DecayProfile) {
    SlitField g = slit_greens(SlitBox(64));
    auto p = slit_decay_profile(g, 8, 16);
    ASSERT_EQ(p.size(), 9u);
    EXPECT_NEAR(p[0], std::abs(g(8, 0)) * std::sqrt(8.0), 1e-15);
    EXPECT_NEAR(plateau_spread({2, 3, 2.5}), 0.5, 1e-15);
    EXPECT_THROW(slit_decay_profile(g, 0, 4), Error);
    EXPECT_THROW(slit_decay_profile(g, 8, 65), Error);
}

TEST(SlitGreens, FnValuesInUnitInterval) {
    SlitBox box(32);
    SlitField f = slit_fn(box, 4);
    for (int y = -32; y <= 32; ++y)
        for (int x = -32; x <= 32; ++x) {
            EXPECT_GE(f(x, y), -1e-12);
            EXPECT_LE(f(x, y), 1 + 1e-12);
        }
    EXPECT_EQ(f(-4, 0), 0.0);
    EXPECT_EQ(f(-5, 0), 1.0);
    SlitField s = slit_fn(box, 4, -1);
    EXPECT_TRUE(s.in_box(-33, 0));
    EXPECT_FALSE(s.in_box(33, 0));
    EXPECT_EQ(s(-33, 5), 1.0);
}

TEST(SlitGreens, FnConstructionMatchesDirect) {
    SlitBox box(256);
    SlitField g = slit_greens(box);
    FnConstruction c = fn_construction(32, box);
    double worst = 0;
    for (int y = -256; y <= 256; ++y)
        for (int x = -256; x <= 256; ++x) worst = std::max(worst, std::abs(c.greens(x, y) - g(x, y)));
    EXPECT_LE(worst, 1e-6);
    EXPECT_NEAR(c.laplacian_at_0, -(c.fn1(0, 0) + c.fn1(-1, 1) + c.fn1(-1, -1)), 1e-9);
}

TEST(SlitGreens, Errors) {
    EXPECT_THROW(SlitBox(4), Error);
    EXPECT_THROW(fn_construction(16, SlitBox(64)), Error);
    EXPECT_THROW(slit_fn(SlitBox(16), 0), Error);
}

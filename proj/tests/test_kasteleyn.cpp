#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "tilinglab/error.hpp"
#include "tilinglab/kasteleyn.hpp"
#include "tilinglab/treelap.hpp"

using namespace tilinglab;

namespace {

Polyomino rect(int w, int h) {
    std::vector<Point> cs;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) cs.push_back({x, y});
    return Polyomino(cs);
}

TemperleyanPolyomino square_minus_corner(int side) {
    int m = (side + 1) / 2;
    return temperleyan_from_subgraph(GridSubgraph::grid(m, m));
}

// Kasteleyn-Temperley-Fisher product for the w x h rectangle, in long double.
double ktf_count(int w, int h) {
    long double prod = 1;
    for (int j = 1; j <= w / 2; ++j)
        for (int k = 1; k <= h / 2; ++k) {
            long double a = std::cos(M_PI * j / (w + 1)), b = std::cos(M_PI * k / (h + 1));
            prod *= 4 * a * a + 4 * b * b;
        }
    return static_cast<double>(prod);
}

Polyomino random_region(std::mt19937_64& rng, int max_cells) {
    std::uniform_int_distribution<int> dir(0, 3);
    std::set<Point> cells{{0, 0}};
    std::uniform_int_distribution<int> size(2, max_cells);
    int target = size(rng);
    const Point d[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    while (static_cast<int>(cells.size()) < target) {
        auto it = cells.begin();
        std::advance(it, std::uniform_int_distribution<int>(0, cells.size() - 1)(rng));
        cells.insert(*it + d[dir(rng)]);
    }
    return Polyomino(std::vector<Point>(cells.begin(), cells.end()));
}

}  // namespace

TEST(Kasteleyn, Domino) {
    auto k = build_kasteleyn(rect(2, 1));
    EXPECT_EQ(k.dim(), 1);
    EXPECT_EQ(count_tilings_exact(k), 1);
}

TEST(Kasteleyn, WeightsAroundWhite) {
    auto k = build_kasteleyn(rect(3, 3).without({{0, 0}}));
    int w = k.row_of({1, 2});
    ASSERT_GE(w, 0);
    EXPECT_EQ(k.entry(w, k.col_of({2, 2})), GaussInt(1, 0));
    EXPECT_EQ(k.entry(w, k.col_of({0, 2})), GaussInt(-1, 0));
    EXPECT_EQ(k.entry(w, k.col_of({1, 1})), GaussInt(0, -1));
    EXPECT_EQ(count_tilings_exact(k), 4);
}

TEST(Kasteleyn, SmallCounts) {
    EXPECT_EQ(count_tilings_exact(build_kasteleyn(rect(2, 3))), 3);
    EXPECT_EQ(count_tilings_exact(build_kasteleyn(rect(2, 2))), 2);
    EXPECT_EQ(count_tilings_exact(build_kasteleyn(rect(8, 8))), 12988816);
    EXPECT_NEAR(ktf_count(8, 8), 12988816.0, 1e-3);
    EXPECT_NEAR(ktf_count(6, 8), count_tilings_exact(build_kasteleyn(rect(6, 8))).get_d(), 1e-3);
}

TEST(Kasteleyn, UnbalancedThrows) {
    try {
        build_kasteleyn(rect(3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnbalancedColors);
    }
}

TEST(Kasteleyn, UntileableGivesZero) {
    // two balanced-in-total straight triominoes
    Polyomino p({{0, 0}, {1, 0}, {2, 0}, {5, 0}, {6, 0}, {7, 0}});
    EXPECT_EQ(count_tilings_exact(build_kasteleyn(p)), 0);
    EXPECT_EQ(count_tilings_exact(build_kasteleyn(p)), count_tilings_enumeration(p));
}

TEST(Kasteleyn, EnumerationSmall) {
    auto t = enumerate_tilings(rect(2, 2));
    EXPECT_EQ(t.size(), 2u);
    EXPECT_EQ(enumerate_tilings(rect(2, 3)).size(), 3u);
    EXPECT_TRUE(enumerate_tilings(rect(1, 3)).empty());
    EXPECT_THROW(enumerate_tilings(rect(4, 4), 10), Error);
}

TEST(Kasteleyn, MatchesEnumerationOnRandomRegions) {
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 60) {
        Polyomino p = random_region(rng, 30);
        if (p.whites().size() != p.blacks().size()) continue;
        EXPECT_EQ(count_tilings_exact(build_kasteleyn(p)), count_tilings_enumeration(p));
        ++tested;
    }
}

TEST(Kasteleyn, DeterminantInvariantUnderRelabeling) {
    auto k = build_kasteleyn(square_minus_corner(5));
    auto m = k.dense();
    std::mt19937_64 rng(3);
    std::vector<int> perm(m.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<GaussInt>> pm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        pm[i].resize(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) pm[i][j] = m[perm[i]][perm[(j + 3) % m.size()]];
    }
    EXPECT_EQ(bareiss_determinant(pm).norm(), bareiss_determinant(m).norm());
}

TEST(Kasteleyn, FullAdjacencyDeterminantIsSquare) {
    for (const Polyomino& p : {rect(2, 3), rect(4, 3), square_minus_corner(5).polyomino()}) {
        auto k = build_kasteleyn(p);
        int n = k.dim();
        std::vector<std::vector<GaussInt>> a(2 * n, std::vector<GaussInt>(2 * n));
        for (int r = 0; r < n; ++r)
            for (const auto& e : k.row(r)) {
                a[r][n + e.col] = k.entry(r, e.col);
                a[n + e.col][r] = k.entry(r, e.col);
            }
        BigInt c = count_tilings_exact(k);
        GaussInt d = bareiss_determinant(a);
        EXPECT_EQ(d.norm(), c * c * c * c);
        EXPECT_EQ(sgn(d.im), 0);
    }
}

TEST(Kasteleyn, LogCount) {
    auto lc = log_count_tilings(build_kasteleyn(rect(2, 2)));
    EXPECT_NEAR(lc.value, std::log(2.0), 1e-9);
    EXPECT_NEAR(log_count_tilings(build_kasteleyn(square_minus_corner(3))).value, std::log(4.0), 1e-9);
    auto k = build_kasteleyn(square_minus_corner(21));
    double exact = std::log(count_tilings_exact(k).get_d());
    auto f = log_count_tilings(k);
    EXPECT_NEAR(f.value, exact, 1e-6 * exact);
    EXPECT_LE(f.error_bound, std::ldexp(1.0, -10));
    auto hp = log_count_tilings(k, 128);
    EXPECT_EQ(hp.method, "exact+mpfr");
    EXPECT_NEAR(hp.value, exact, 1e-12 * exact);
    EXPECT_THROW(log_count_tilings(build_kasteleyn(Polyomino({{0, 0}, {1, 1}, {2, 0}, {1, 0}, {3, 1}, {2, 2}}))),
                 Error);
}

TEST(Kasteleyn, HoleMatchesEnumeration) {
    auto p = square_minus_corner(5);
    // b on the left edge, w its upper neighbor's neighbor
    HoleSpec hs{{0, 2}, {0, 3}, {}};
    hs.flip_path = default_flip_path(p.polyomino(), hs.removed_white);
    auto k = kasteleyn_with_holes(p, hs);
    auto q = p.polyomino().without({hs.removed_black, hs.removed_white});
    EXPECT_EQ(count_tilings_exact(k), count_tilings_enumeration(q));
}

TEST(Kasteleyn, HoleGaugeInvariance) {
    auto p = square_minus_corner(7);
    Point b{0, 4};
    std::vector<Point> whites{{3, 2}, {1, 2}, {3, 4}, {2, 3}, {4, 1}};
    for (Point w : whites) {
        HoleSpec hs{b, w, default_flip_path(p.polyomino(), w)};
        BigInt ref = count_tilings_exact(kasteleyn_with_holes(p, hs));
        EXPECT_EQ(ref, count_tilings_enumeration(p.polyomino().without({b, w})));
        for (std::uint64_t s = 1; s <= 8; ++s) {
            hs.flip_path = random_flip_path(p.polyomino(), w, s);
            EXPECT_EQ(count_tilings_exact(kasteleyn_with_holes(p, hs)), ref);
        }
    }
}

TEST(Kasteleyn, HoleErrors) {
    auto p = square_minus_corner(5);
    HoleSpec hs{{0, 2}, {0, 3}, {{2, 2}, {2, 3}}};
    EXPECT_THROW(kasteleyn_with_holes(p, hs), Error);
    hs.flip_path = {{0, 3}, {1, 4}};
    try {
        kasteleyn_with_holes(p, hs);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPath);
    }
    HoleSpec missing{{10, 10}, {0, 3}, {{0, 3}}};
    try {
        kasteleyn_with_holes(p, missing);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CellMissing);
    }
    EXPECT_THROW(build_kasteleyn(p.polyomino().without({{0, 3}})), Error);
}

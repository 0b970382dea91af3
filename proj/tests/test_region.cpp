#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tilinglab/error.hpp"
#include "tilinglab/region.hpp"

using namespace tilinglab;

namespace {

int count_class(const TemperleyanPolyomino& p, CellClass k) {
    int n = 0;
    for (Point c : p.polyomino().cells())
        if (cell_class(c) == k) ++n;
    return n;
}

RectilinearPolygon l_shape() {
    return RectilinearPolygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, {0, 0});
}

}  // namespace

TEST(Region, PathGraphGivesDomino) {
    auto h = GridSubgraph::induced({{0, 0}, {2, 0}}, Point{0, 0});
    auto p = temperleyan_from_subgraph(h);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.base_square(), (Point{0, 0}));
    EXPECT_EQ(p.polyomino().whites().size(), 1u);
    EXPECT_EQ(p.polyomino().blacks().size(), 1u);
}

TEST(Region, TwoByTwoGrid) {
    auto h = GridSubgraph::grid(2, 2);
    auto p = temperleyan_from_subgraph(h);
    EXPECT_EQ(p.size(), 8u);
    EXPECT_FALSE(p.polyomino().contains({0, 0}));
    EXPECT_EQ(h.boundary_length(), 4);
    EXPECT_EQ(static_cast<long>(p.size()), 4L * 4 - h.boundary_length() - 4);
}

TEST(Region, GridIsOddRectangleMinusCorner) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto h = GridSubgraph::grid(m, n);
            auto p = temperleyan_from_subgraph(h);
            auto q = p.closure();
            EXPECT_EQ(q.size(), static_cast<std::size_t>((2 * m - 1) * (2 * n - 1)));
            EXPECT_EQ(p.size(), q.size() - 1);
            for (Point c : q.cells()) {
                EXPECT_GE(c.x, 0);
                EXPECT_LT(c.x, 2 * m - 1);
                EXPECT_LT(c.y, 2 * n - 1);
            }
        }
}

TEST(Region, EulerAndAreaPerimeter) {
    std::vector<GridSubgraph> hs;
    hs.push_back(GridSubgraph::grid(3, 3));
    hs.push_back(GridSubgraph::grid(4, 2));
    hs.push_back(GridSubgraph::induced({{0, 0}, {2, 0}, {4, 0}, {0, 2}, {2, 2}, {4, 2}, {0, 4}, {2, 4}}));
    hs.push_back(GridSubgraph::induced({{0, 0}, {2, 0}, {2, 2}, {4, 2}, {4, 4}}));
    for (const auto& h : hs) {
        auto p = temperleyan_from_subgraph(h);
        long v = h.vertices().size(), e = h.edges().size(), f = h.faces().size();
        EXPECT_EQ(static_cast<long>(p.size()), v + e + f - 1);
        EXPECT_EQ(static_cast<long>(p.size()), 4 * v - h.boundary_length() - 4);
        EXPECT_EQ(p.polyomino().whites().size(), p.polyomino().blacks().size());
    }
    // perimeter formula for regions with the base at a convex corner
    for (const auto& h : {hs[0], hs[1], hs[2]}) {
        auto p = temperleyan_from_subgraph(h);
        EXPECT_EQ(p.polyomino().perimeter(), 2L * h.boundary_length() + 4);
    }
}

TEST(Region, ClassesSitOnVerticesEdgesFaces) {
    auto h = GridSubgraph::grid(3, 4);
    auto p = temperleyan_from_subgraph(h);
    EXPECT_EQ(count_class(p, CellClass::B0), static_cast<int>(h.vertices().size()) - 1);
    EXPECT_EQ(count_class(p, CellClass::B1), static_cast<int>(h.faces().size()));
    EXPECT_EQ(count_class(p, CellClass::W0) + count_class(p, CellClass::W1), static_cast<int>(h.edges().size()));
    for (Point c : p.polyomino().cells()) {
        if (cell_class(c) == CellClass::W0) EXPECT_TRUE(h.has_edge(c));
        if (cell_class(c) == CellClass::B0) EXPECT_TRUE(h.has_vertex(c));
    }
    EXPECT_TRUE(p.boundary_parity_ok());
}

TEST(Region, RejectsCycleAroundHole) {
    std::vector<Point> ring;
    for (int x = 0; x <= 4; x += 2)
        for (int y = 0; y <= 4; y += 2)
            if (!(x == 2 && y == 2)) ring.push_back({x, y});
    try {
        GridSubgraph::induced(ring);
        FAIL() << "ring accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSimplyConnected);
    }
}

TEST(Region, RejectsInteriorBase) {
    try {
        GridSubgraph::grid(3, 3, Point{2, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BaseNotOnBoundary);
    }
}

TEST(Region, AsciiRoundTrip) {
    const char* txt =
        "#####\n"
        "#####\n"
        "#####\n"
        "#####\n"
        "X####\n";
    auto p = temperleyan_from_ascii(txt);
    EXPECT_EQ(p.size(), 24u);
    EXPECT_EQ(p.base_square(), (Point{0, 0}));
    EXPECT_EQ(render_region_ascii(p.polyomino(), p.base_square()), txt);
    auto h = p.subgraph();
    EXPECT_EQ(h.vertices().size(), 9u);
}

TEST(Region, AsciiRejectsNonTemperleyan) {
    EXPECT_THROW(temperleyan_from_ascii("###\nX##\n"), Error);
}

TEST(Region, PolygonCornerCounts) {
    auto u = l_shape();
    EXPECT_EQ(u.vertex_count(), 6);
    EXPECT_EQ(u.concave_count(), 1);
    EXPECT_DOUBLE_EQ(u.area(), 3.0);
    auto r = RectilinearPolygon::rectangle(1, 2);
    EXPECT_EQ(r.concave_count(), 0);
    EXPECT_THROW(RectilinearPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 2}}, {0, 0}), Error);
}

TEST(Region, BoundaryTurning) {
    auto sq = RectilinearPolygon::rectangle(1, 1);
    EXPECT_NEAR(boundary_turning(sq, {1, 0.01}), std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(boundary_turning(sq, {0.5, 0}), 0, 1e-12);
    EXPECT_NEAR(boundary_turning(sq, {0, 1e-9 + 1e-6}), 3 * std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(boundary_turning(sq, {0, 0.5}) + std::numbers::pi / 2, 2 * std::numbers::pi, 1e-12);
    EXPECT_EQ(boundary_height(sq, {0.5, 1}), 2);
    auto u = l_shape();
    // past corners (2,0), (2,1) convex and (1,1) concave
    EXPECT_NEAR(boundary_turning(u, {1, 1.5}), std::numbers::pi / 2, 1e-12);
    EXPECT_THROW(boundary_turning(u, {1, 1}), Error);
    EXPECT_THROW(boundary_turning(u, {0.5, 0.5}), Error);
}

TEST(Region, ApproximateUnitSquare) {
    auto p = approximate_polygon(RectilinearPolygon::rectangle(1, 1), 1.0 / 9);
    auto q = p.closure();
    EXPECT_EQ(q.size(), 81u);
    EXPECT_EQ(p.size(), 80u);
    EXPECT_EQ(p.base_square(), (Point{0, 0}));
    EXPECT_TRUE(p.boundary_parity_ok());
    try {
        approximate_polygon(RectilinearPolygon::rectangle(1, 1), 0.6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EpsTooLarge);
    }
}

namespace {

void check_corners_close(const RectilinearPolygon& u, const TemperleyanPolyomino& p, double eps) {
    auto b = trace_boundary(p.closure());
    ASSERT_EQ(static_cast<int>(b.corners.size()), u.vertex_count());
    for (const auto& c : u.corners()) {
        double best = 1e300;
        for (Point q : b.corners) best = std::min(best, std::hypot(q.x * eps - c.x, q.y * eps - c.y));
        EXPECT_LE(best, 2 * eps);
    }
    Point bs = p.base_square();
    EXPECT_LE(std::hypot((bs.x + 0.5) * eps - u.base_point().x, (bs.y + 0.5) * eps - u.base_point().y), 2 * eps);
}

}  // namespace

TEST(Region, ApproximateLShape) {
    auto u = l_shape();
    for (double eps : {1.0 / 20, 1.0 / 40, 0.03}) {
        auto p = approximate_polygon(u, eps);
        check_corners_close(u, p, eps);
        EXPECT_TRUE(p.boundary_parity_ok());
        EXPECT_EQ(p.polyomino().whites().size(), p.polyomino().blacks().size());
    }
}

TEST(Region, ApproximationAtHalfScaleIsClose) {
    RectilinearPolygon u({{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 2.5}, {0, 2.5}}, {1.5, 0});
    double eps = 1.0 / 16;
    auto p1 = approximate_polygon(u, eps);
    auto p2 = approximate_polygon(u, eps / 2);
    check_corners_close(u, p1, eps);
    check_corners_close(u, p2, eps / 2);
    auto c1 = trace_boundary(p1.closure()).corners;
    auto c2 = trace_boundary(p2.closure()).corners;
    ASSERT_EQ(c1.size(), c2.size());
    for (Point a : c1) {
        double best = 1e300;
        for (Point b : c2) best = std::min(best, std::hypot(a.x * eps - b.x * eps / 2, a.y * eps - b.y * eps / 2));
        EXPECT_LE(best, 2 * eps);
    }
}

TEST(Region, PolygonJsonRoundTrip) {
    auto u = l_shape();
    auto v = parse_polygon_json(polygon_to_json(u));
    EXPECT_EQ(v.vertex_count(), 6);
    EXPECT_DOUBLE_EQ(v.area(), 3.0);
    EXPECT_THROW(parse_polygon_json("{\"nope\": 1}"), Error);
}

#include "tilinglab/region.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tilinglab/error.hpp"

namespace tilinglab {

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }

const Point kDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

CellClass cell_class(Point c) {
    int px = mod2(c.x), py = mod2(c.y);
    if (px == 0 && py == 0) return CellClass::B0;
    if (px == 1 && py == 1) return CellClass::B1;
    if (px == 1) return CellClass::W0;
    return CellClass::W1;
}

const char* cell_class_name(CellClass c) {
    switch (c) {
    case CellClass::B0: return "B0";
    case CellClass::B1: return "B1";
    case CellClass::W0: return "W0";
    case CellClass::W1: return "W1";
    }
    return "?";
}

GridSubgraph::GridSubgraph(std::vector<Point> vertices, std::vector<Point> edge_midpoints,
                           std::optional<Point> base)
    : vertices_(std::move(vertices)), edges_(std::move(edge_midpoints)) {
    std::sort(vertices_.begin(), vertices_.end(), lower_left_less);
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end(), lower_left_less);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (vertices_.empty()) throw Error(ErrorKind::InvalidRegion, "graph has no vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (cell_class(vertices_[i]) != CellClass::B0)
            throw Error(ErrorKind::InvalidRegion, "vertex off the even sublattice");
        vindex_[vertices_[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Point e = edges_[i];
        CellClass k = cell_class(e);
        if (k != CellClass::W0 && k != CellClass::W1)
            throw Error(ErrorKind::InvalidRegion, "edge midpoint is not a white cell");
        Point d = k == CellClass::W0 ? Point{1, 0} : Point{0, 1};
        if (!has_vertex(e - d) || !has_vertex(e + d))
            throw Error(ErrorKind::InvalidRegion, "edge endpoint missing");
        eset_[e] = static_cast<int>(i);
    }
    std::set<Point> cand;
    for (Point e : edges_)
        if (cell_class(e) == CellClass::W0) {
            cand.insert({e.x, e.y + 1});
            cand.insert({e.x, e.y - 1});
        }
    for (Point f : cand) {
        if (has_edge({f.x, f.y - 1}) && has_edge({f.x, f.y + 1}) && has_edge({f.x - 1, f.y}) &&
            has_edge({f.x + 1, f.y}))
            faces_.push_back(f);
    }
    std::sort(faces_.begin(), faces_.end(), lower_left_less);
    for (std::size_t i = 0; i < faces_.size(); ++i) fset_[faces_[i]] = static_cast<int>(i);
    base_ = base.value_or(vertices_.front());
    validate();
}

GridSubgraph GridSubgraph::from_vertex_pairs(const std::vector<Point>& vertices,
                                             const std::vector<std::pair<Point, Point>>& edges,
                                             std::optional<Point> base) {
    std::vector<Point> mids;
    for (auto [a, b] : edges) {
        int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
        if (dx + dy != 2 || (dx != 0 && dy != 0))
            throw Error(ErrorKind::InvalidRegion, "edge endpoints are not grid neighbors");
        mids.push_back({(a.x + b.x) / 2, (a.y + b.y) / 2});
    }
    return GridSubgraph(vertices, mids, base);
}

GridSubgraph GridSubgraph::grid(int m, int n, std::optional<Point> base) {
    if (m < 1 || n < 1) throw Error(ErrorKind::InvalidRegion, "grid dimensions must be positive");
    std::vector<Point> vs;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) vs.push_back({2 * i, 2 * j});
    return induced(vs, base);
}

GridSubgraph GridSubgraph::induced(const std::vector<Point>& vertices, std::optional<Point> base) {
    std::set<Point> vs(vertices.begin(), vertices.end());
    std::vector<Point> mids;
    for (Point v : vs) {
        if (vs.count({v.x + 2, v.y})) mids.push_back({v.x + 1, v.y});
        if (vs.count({v.x, v.y + 2})) mids.push_back({v.x, v.y + 1});
    }
    return GridSubgraph(vertices, mids, base);
}

int GridSubgraph::vertex_index(Point v) const {
    auto it = vindex_.find(v);
    return it == vindex_.end() ? -1 : it->second;
}

std::vector<Point> GridSubgraph::neighbors(Point v) const {
    std::vector<Point> out;
    for (Point d : kDirs)
        if (has_edge(v + d)) out.push_back(v + d + d);
    return out;
}

bool GridSubgraph::on_outer_face(Point v) const {
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            if (!has_face({v.x + sx, v.y + sy})) return true;
    return false;
}

int GridSubgraph::boundary_length() const {
    return 2 * static_cast<int>(edges_.size()) - 4 * static_cast<int>(faces_.size());
}

void GridSubgraph::validate() {
    std::vector<char> seen(vertices_.size(), 0);
    std::deque<Point> queue{vertices_.front()};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
        Point v = queue.front();
        queue.pop_front();
        for (Point w : neighbors(v)) {
            int k = vertex_index(w);
            if (!seen[k]) {
                seen[k] = 1;
                ++count;
                queue.push_back(w);
            }
        }
    }
    if (count != vertices_.size()) throw Error(ErrorKind::NotSimplyConnected, "graph is disconnected");
    long cycles = static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
    if (cycles != static_cast<long>(faces_.size()))
        throw Error(ErrorKind::NotSimplyConnected, "graph has a cycle that does not bound unit faces");
    if (!has_vertex(base_)) throw Error(ErrorKind::BaseNotOnBoundary, "base is not a vertex");
    if (!on_outer_face(base_)) throw Error(ErrorKind::BaseNotOnBoundary, "base is an interior vertex");
}

Polyomino::Polyomino(std::vector<Point> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(), lower_left_less);
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (std::size_t i = 0; i < cells_.size(); ++i) index_[cells_[i]] = static_cast<int>(i);
}

int Polyomino::index_of(Point c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Point> Polyomino::whites() const {
    std::vector<Point> out;
    for (Point c : cells_)
        if (!is_black_cell(c)) out.push_back(c);
    return out;
}

std::vector<Point> Polyomino::blacks() const {
    std::vector<Point> out;
    for (Point c : cells_)
        if (is_black_cell(c)) out.push_back(c);
    return out;
}

long Polyomino::perimeter() const {
    long p = 0;
    for (Point c : cells_)
        for (Point d : kDirs)
            if (!contains(c + d)) ++p;
    return p;
}

Polyomino Polyomino::without(const std::vector<Point>& removed) const {
    std::set<Point> r(removed.begin(), removed.end());
    std::vector<Point> keep;
    for (Point c : cells_)
        if (!r.count(c)) keep.push_back(c);
    return Polyomino(keep);
}

Polyomino Polyomino::with(const std::vector<Point>& added) const {
    std::vector<Point> all = cells_;
    all.insert(all.end(), added.begin(), added.end());
    return Polyomino(all);
}

PolyominoBoundary trace_boundary(const Polyomino& p) {
    PolyominoBoundary out;
    if (p.size() == 0) return out;
    std::multimap<Point, Point> next;
    for (Point c : p.cells()) {
        Point ll = c, lr = {c.x + 1, c.y}, ur = {c.x + 1, c.y + 1}, ul = {c.x, c.y + 1};
        if (!p.contains({c.x, c.y - 1})) next.insert({ll, lr});
        if (!p.contains({c.x + 1, c.y})) next.insert({lr, ur});
        if (!p.contains({c.x, c.y + 1})) next.insert({ur, ul});
        if (!p.contains({c.x - 1, c.y})) next.insert({ul, ll});
    }
    Point start = p.cells().front();
    Point cur = start;
    Point dir{1, 0};
    std::vector<Point> pts;
    std::size_t guard = next.size() + 1;
    do {
        auto [lo, hi] = next.equal_range(cur);
        if (lo == hi) break;
        auto pick = lo;
        if (std::next(lo) != hi) {
            // pinch point: prefer the left turn
            for (auto it = lo; it != hi; ++it) {
                Point d = it->second - cur;
                if (dir.x * d.y - dir.y * d.x > 0) pick = it;
            }
        }
        Point nd = pick->second - cur;
        if (nd != dir || pts.empty()) pts.push_back(cur);
        dir = nd;
        Point nxt = pick->second;
        next.erase(pick);
        cur = nxt;
    } while (cur != start && --guard > 0);
    // drop non-corner points and classify
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point a = pts[(i + n - 1) % n], b = pts[i], c = pts[(i + 1) % n];
        Point d1 = b - a, d2 = c - b;
        long cross = static_cast<long>(d1.x) * d2.y - static_cast<long>(d1.y) * d2.x;
        if (cross == 0) continue;
        out.corners.push_back(b);
        out.convex.push_back(cross > 0);
    }
    return out;
}

TemperleyanPolyomino::TemperleyanPolyomino(Polyomino cells, Point base, std::optional<double> scale)
    : cells_(std::move(cells)), base_(base), scale_(scale) {
    if (cell_class(base_) != CellClass::B0)
        throw Error(ErrorKind::InvalidRegion, "base square must sit at a vertex of H");
    if (cells_.contains(base_)) throw Error(ErrorKind::InvalidRegion, "base square is listed as a cell");
    subgraph();
}

GridSubgraph TemperleyanPolyomino::subgraph() const {
    std::vector<Point> vs{base_}, es, fs;
    for (Point c : cells_.cells()) {
        switch (cell_class(c)) {
        case CellClass::B0: vs.push_back(c); break;
        case CellClass::B1: fs.push_back(c); break;
        default: es.push_back(c); break;
        }
    }
    GridSubgraph h(vs, es, base_);
    if (h.faces() != Polyomino(fs).cells())
        throw Error(ErrorKind::InvalidRegion, "B1 cells do not match the faces of H");
    return h;
}

bool TemperleyanPolyomino::boundary_parity_ok() const {
    PolyominoBoundary b = trace_boundary(closure());
    std::size_t n = b.corners.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        Point d = b.corners[j] - b.corners[i];
        int len = std::abs(d.x) + std::abs(d.y);
        bool same = b.convex[i] == b.convex[j];
        if (same != (len % 2 == 1)) return false;
    }
    return true;
}

TemperleyanPolyomino temperleyan_from_subgraph(const GridSubgraph& h) {
    std::vector<Point> cells;
    for (Point v : h.vertices())
        if (v != h.base()) cells.push_back(v);
    cells.insert(cells.end(), h.edges().begin(), h.edges().end());
    cells.insert(cells.end(), h.faces().begin(), h.faces().end());
    return TemperleyanPolyomino(Polyomino(cells), h.base());
}

RectilinearPolygon::RectilinearPolygon(std::vector<PointD> corners, PointD base_point)
    : corners_(std::move(corners)), base_(base_point) {
    std::size_t n = corners_.size();
    if (n < 4 || n % 2 != 0) throw Error(ErrorKind::InvalidPolygon, "need an even number >= 4 of corners");
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const PointD& a = corners_[i];
        const PointD& b = corners_[(i + 1) % n];
        s += a.x * b.y - a.y * b.x;
    }
    if (s < 0) std::reverse(corners_.begin(), corners_.end());
    if (s == 0) throw Error(ErrorKind::InvalidPolygon, "zero area");
    for (std::size_t i = 0; i < n; ++i) {
        const PointD& a = corners_[i];
        const PointD& b = corners_[(i + 1) % n];
        const PointD& c = corners_[(i + 2) % n];
        bool h1 = a.y == b.y && a.x != b.x, v1 = a.x == b.x && a.y != b.y;
        bool h2 = b.y == c.y && b.x != c.x, v2 = b.x == c.x && b.y != c.y;
        if (!((h1 && v2) || (v1 && h2)))
            throw Error(ErrorKind::InvalidPolygon, "edges must alternate horizontal and vertical");
    }
    // simple: non-adjacent edges do not touch
    auto seg_touch = [](PointD a, PointD b, PointD c, PointD d) {
        double ax0 = std::min(a.x, b.x), ax1 = std::max(a.x, b.x), ay0 = std::min(a.y, b.y), ay1 = std::max(a.y, b.y);
        double cx0 = std::min(c.x, d.x), cx1 = std::max(c.x, d.x), cy0 = std::min(c.y, d.y), cy1 = std::max(c.y, d.y);
        return ax0 <= cx1 && cx0 <= ax1 && ay0 <= cy1 && cy0 <= ay1;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (seg_touch(corners_[i], corners_[(i + 1) % n], corners_[j], corners_[(j + 1) % n]))
                throw Error(ErrorKind::InvalidPolygon, "polygon is not simple");
        }
    convex_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const PointD& a = corners_[(i + n - 1) % n];
        const PointD& b = corners_[i];
        const PointD& c = corners_[(i + 1) % n];
        convex_[i] = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) > 0;
    }
    if (!boundary_position(base_)) throw Error(ErrorKind::PointNotOnBoundary, "base point is not on the boundary");
}

RectilinearPolygon RectilinearPolygon::rectangle(double w, double h) {
    return RectilinearPolygon({{0, 0}, {w, 0}, {w, h}, {0, h}}, {0, 0});
}

int RectilinearPolygon::concave_count() const {
    return static_cast<int>(std::count(convex_.begin(), convex_.end(), false));
}

double RectilinearPolygon::side_length(int i) const {
    const PointD& a = corners_[i];
    const PointD& b = corners_[(i + 1) % corners_.size()];
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

double RectilinearPolygon::min_side() const {
    double m = side_length(0);
    for (int i = 1; i < vertex_count(); ++i) m = std::min(m, side_length(i));
    return m;
}

double RectilinearPolygon::perimeter() const {
    double s = 0;
    for (int i = 0; i < vertex_count(); ++i) s += side_length(i);
    return s;
}

double RectilinearPolygon::area() const {
    double s = 0;
    std::size_t n = corners_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PointD& a = corners_[i];
        const PointD& b = corners_[(i + 1) % n];
        s += a.x * b.y - a.y * b.x;
    }
    return s / 2;
}

bool RectilinearPolygon::contains(PointD p) const {
    bool in = false;
    std::size_t n = corners_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PointD& a = corners_[i];
        const PointD& b = corners_[(i + 1) % n];
        if (a.x != b.x) continue;
        double y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
        if (p.y >= y0 && p.y < y1 && a.x > p.x) in = !in;
    }
    return in;
}

std::optional<double> RectilinearPolygon::boundary_position(PointD p, double tol) const {
    double acc = 0;
    std::size_t n = corners_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PointD& a = corners_[i];
        const PointD& b = corners_[(i + 1) % n];
        double len = side_length(static_cast<int>(i));
        double t;
        double dist;
        if (a.y == b.y) {
            t = (p.x - a.x) / (b.x - a.x);
            dist = std::abs(p.y - a.y);
        } else {
            t = (p.y - a.y) / (b.y - a.y);
            dist = std::abs(p.x - a.x);
        }
        if (dist <= tol && t >= -tol / len && t <= 1 + tol / len) return acc + std::clamp(t, 0.0, 1.0) * len;
        acc += len;
    }
    return std::nullopt;
}

double boundary_turning(const RectilinearPolygon& u, PointD x) {
    auto px = u.boundary_position(x);
    if (!px) throw Error(ErrorKind::PointNotOnBoundary, "point is not on the boundary");
    double per = u.perimeter();
    double pb = *u.boundary_position(u.base_point());
    double acc = 0;
    std::vector<double> cpos;
    for (int i = 0; i < u.vertex_count(); ++i) {
        cpos.push_back(acc);
        acc += u.side_length(i);
    }
    const double tol = 1e-9 * per;
    for (double c : cpos)
        if (std::abs(c - *px) < tol || std::abs(std::abs(c - *px) - per) < tol)
            throw Error(ErrorKind::PointNotOnBoundary, "point is a corner");
    double t = std::fmod(*px - pb + per, per);
    double turn = 0;
    for (int i = 0; i < u.vertex_count(); ++i) {
        double s = std::fmod(cpos[i] - pb + per, per);
        if (s > tol && s < t) turn += u.convex(i) ? std::numbers::pi / 2 : -std::numbers::pi / 2;
    }
    return turn;
}

int boundary_height(const RectilinearPolygon& u, PointD x) {
    return static_cast<int>(std::lround(boundary_turning(u, x) * 2 / std::numbers::pi));
}

namespace {

int nearest_with_parity(double v, int parity) {
    int lo = static_cast<int>(std::floor(v));
    int best = 0;
    double bd = 1e300;
    for (int c = lo - 2; c <= lo + 3; ++c) {
        if (mod2(c) != parity) continue;
        double d = std::abs(c - v);
        if (d < bd - 1e-12) {
            bd = d;
            best = c;
        }
    }
    return best;
}

}  // namespace

TemperleyanPolyomino approximate_polygon(const RectilinearPolygon& u, double eps) {
    if (!(eps > 0) || u.min_side() <= 4 * eps)
        throw Error(ErrorKind::EpsTooLarge, "every side must exceed 4*eps");
    const auto& cs = u.corners();
    int n = u.vertex_count();
    // H-vertex coordinate of each side's line
    std::vector<int> line(n);
    for (int i = 0; i < n; ++i) {
        PointD a = cs[i], b = cs[(i + 1) % n];
        if (a.x == b.x) {
            bool right_side = b.y > a.y;
            int q = nearest_with_parity(a.x / eps, right_side ? 1 : 0);
            line[i] = right_side ? q - 1 : q;
        } else {
            bool bottom = b.x > a.x;
            int q = nearest_with_parity(a.y / eps, bottom ? 0 : 1);
            line[i] = bottom ? q : q - 1;
        }
    }
    std::vector<PointD> snapped(n);
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n;
        PointD a = cs[i], b = cs[(i + 1) % n];
        bool out_vertical = a.x == b.x;
        int vx = out_vertical ? line[i] : line[prev];
        int vy = out_vertical ? line[prev] : line[i];
        snapped[i] = {static_cast<double>(vx), static_cast<double>(vy)};
    }
    std::optional<RectilinearPolygon> vpoly;
    try {
        vpoly.emplace(snapped, snapped[0]);
    } catch (const Error&) {
        throw Error(ErrorKind::EpsTooLarge, "snapping collapsed the polygon");
    }
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (auto& p : snapped) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    std::set<Point> vs;
    std::set<Point> es;
    for (int x = static_cast<int>(xmin); x < static_cast<int>(xmax); x += 2)
        for (int y = static_cast<int>(ymin); y < static_cast<int>(ymax); y += 2) {
            if (!vpoly->contains({x + 1.0, y + 1.0})) continue;
            vs.insert({x, y});
            vs.insert({x + 2, y});
            vs.insert({x, y + 2});
            vs.insert({x + 2, y + 2});
            es.insert({x + 1, y});
            es.insert({x + 1, y + 2});
            es.insert({x, y + 1});
            es.insert({x + 2, y + 1});
        }
    GridSubgraph probe(std::vector<Point>(vs.begin(), vs.end()), std::vector<Point>(es.begin(), es.end()));
    PointD b0 = u.base_point();
    double bx = b0.x / eps, by = b0.y / eps;
    Point best = probe.vertices().front();
    double bd = 1e300;
    for (Point v : probe.vertices()) {
        if (!probe.on_outer_face(v)) continue;
        double d = std::hypot(v.x + 0.5 - bx, v.y + 0.5 - by);
        if (d < bd - 1e-9) {
            bd = d;
            best = v;
        }
    }
    GridSubgraph h(probe.vertices(), probe.edges(), best);
    TemperleyanPolyomino p = temperleyan_from_subgraph(h);
    p.set_scale(eps);
    PolyominoBoundary bnd = trace_boundary(p.closure());
    if (static_cast<int>(bnd.corners.size()) != n)
        throw Error(ErrorKind::EpsTooLarge, "approximation changed the corner count");
    return p;
}

RegionFile parse_region_ascii(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] == ';') continue;
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
    std::vector<Point> cells;
    std::optional<Point> base;
    int rows = static_cast<int>(lines.size());
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < static_cast<int>(lines[r].size()); ++c) {
            char ch = lines[r][c];
            Point p{c, rows - 1 - r};
            if (ch == '#') {
                cells.push_back(p);
            } else if (ch == 'X') {
                if (base) throw Error(ErrorKind::InvalidRegion, "more than one base square");
                base = p;
            } else if (ch != '.' && ch != ' ') {
                throw Error(ErrorKind::InvalidRegion, std::string("unexpected character '") + ch + "'");
            }
        }
    }
    if (cells.empty()) throw Error(ErrorKind::InvalidRegion, "region has no cells");
    int mx = cells[0].x, my = cells[0].y;
    for (Point p : cells) {
        mx = std::min(mx, p.x);
        my = std::min(my, p.y);
    }
    if (base) {
        mx = std::min(mx, base->x);
        my = std::min(my, base->y);
    }
    for (Point& p : cells) p = p - Point{mx, my};
    if (base) *base = *base - Point{mx, my};
    return {Polyomino(cells), base};
}

std::string render_region_ascii(const Polyomino& cells, std::optional<Point> base) {
    std::vector<Point> all = cells.cells();
    if (base) all.push_back(*base);
    if (all.empty()) return "";
    int x0 = all[0].x, x1 = all[0].x, y0 = all[0].y, y1 = all[0].y;
    for (Point p : all) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    std::string out;
    for (int y = y1; y >= y0; --y) {
        for (int x = x0; x <= x1; ++x) {
            Point p{x, y};
            if (base && p == *base) out += 'X';
            else out += cells.contains(p) ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

TemperleyanPolyomino temperleyan_from_ascii(const std::string& text) {
    RegionFile f = parse_region_ascii(text);
    if (!f.base) throw Error(ErrorKind::InvalidRegion, "Temperleyan region needs an 'X' base square");
    return TemperleyanPolyomino(f.cells, *f.base);
}

RectilinearPolygon parse_polygon_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ConfigError, std::string("polygon JSON: ") + e.what());
    }
    if (!j.contains("corners")) throw Error(ErrorKind::ConfigError, "polygon JSON: missing field 'corners'");
    std::vector<PointD> cs;
    for (auto& c : j["corners"]) cs.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    PointD base = cs.empty() ? PointD{} : cs.front();
    if (j.contains("base")) base = {j["base"].at(0).get<double>(), j["base"].at(1).get<double>()};
    return RectilinearPolygon(cs, base);
}

std::string polygon_to_json(const RectilinearPolygon& u) {
    nlohmann::json j;
    j["corners"] = nlohmann::json::array();
    for (auto& c : u.corners()) j["corners"].push_back({c.x, c.y});
    j["base"] = {u.base_point().x, u.base_point().y};
    return j.dump();
}

}  // namespace tilinglab

#include "tilinglab/coupling.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "exact_inverse.hpp"
#include "tilinglab/error.hpp"

namespace tilinglab {

CouplingMatrix::CouplingMatrix(std::vector<Point> whites, std::vector<Point> blacks,
                               std::vector<std::vector<QComplex>> inv)
    : whites_(std::move(whites)), blacks_(std::move(blacks)), inv_(std::move(inv)) {
    for (std::size_t i = 0; i < whites_.size(); ++i) wi_[whites_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < blacks_.size(); ++i) bi_[blacks_[i]] = static_cast<int>(i);
}

const QComplex& CouplingMatrix::at(Point white, Point black) const {
    auto w = wi_.find(white);
    auto b = bi_.find(black);
    if (w == wi_.end() || b == bi_.end()) throw Error(ErrorKind::CellMissing, "cell not in the coupling matrix");
    return inv_[b->second][w->second];
}

QComplex CouplingMatrix::full(Point a, Point b) const {
    if (is_black_cell(a) == is_black_cell(b)) return QComplex(0);
    return is_black_cell(a) ? at(b, a) : at(a, b);
}

CouplingMatrix coupling_matrix(const KasteleynMatrix& k) {
    std::vector<std::vector<QComplex>> m(k.dim(), std::vector<QComplex>(k.dim()));
    for (int r = 0; r < k.dim(); ++r)
        for (const auto& e : k.row(r)) m[r][e.col] = unit_power(e.power);
    // inverse of K (white x black) is black x white
    return CouplingMatrix(k.whites(), k.blacks(), detail::exact_inverse(std::move(m)));
}

bool verify_inverse(const KasteleynMatrix& k, const CouplingMatrix& c) {
    for (int r = 0; r < k.dim(); ++r)
        for (int col = 0; col < k.dim(); ++col) {
            QComplex s;
            for (const auto& e : k.row(r)) s = s + unit_power(e.power) * c.at(k.whites()[col], k.blacks()[e.col]);
            if (!(s == QComplex(r == col ? 1 : 0))) return false;
        }
    return true;
}

Rational local_probability(const CouplingMatrix& c, const KasteleynMatrix& k, const std::vector<Domino>& dominos) {
    const std::size_t n = dominos.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<QComplex>> m(n, std::vector<QComplex>(n));
    for (std::size_t i = 0; i < n; ++i) {
        int r = k.row_of(dominos[i].white), col = k.col_of(dominos[i].black);
        if (k.power(r, col) < 0) throw Error(ErrorKind::NonAdjacentPair, "domino cells are not adjacent");
        QComplex kw = unit_power(k.power(r, col));
        for (std::size_t j = 0; j < n; ++j) m[i][j] = kw * c.at(dominos[j].white, dominos[i].black);
    }
    // determinant by elimination in Q(i)
    QComplex det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            QComplex f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
        }
    }
    Rational p;
    if (!rational_sqrt(det.norm(), p)) throw Error(ErrorKind::DomainError, "probability is not rational");
    return p;
}

DiscreteGreens::DiscreteGreens(const GridSubgraph& h) : h_(h) {
    const auto& vs = h_.vertices();
    int base = h_.vertex_index(h_.base());
    red_.assign(vs.size(), -1);
    int k = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (static_cast<int>(i) != base) red_[i] = k++;
    std::vector<std::vector<Rational>> l(k, std::vector<Rational>(k, 0));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (red_[i] < 0) continue;
        auto nb = h_.neighbors(vs[i]);
        l[red_[i]][red_[i]] = static_cast<long>(nb.size());
        for (Point w : nb) {
            int j = red_[h_.vertex_index(w)];
            if (j >= 0) l[red_[i]][j] = -1;
        }
    }
    inv_ = detail::exact_inverse(std::move(l));
}

Rational DiscreteGreens::operator()(Point x, Point y) const {
    if (!h_.has_vertex(x) || !h_.has_vertex(y)) throw Error(ErrorKind::VertexMissing, "point is not a vertex of H");
    int i = red_[h_.vertex_index(x)], j = red_[h_.vertex_index(y)];
    if (i < 0 || j < 0) return Rational(0);
    return inv_[i][j];
}

Rational DiscreteGreens::laplacian_at(Point x, Point y) const {
    auto nb = h_.neighbors(y);
    Rational s = Rational(static_cast<long>(nb.size())) * (*this)(x, y);
    for (Point w : nb) s -= (*this)(x, w);
    return s;
}

namespace {

const Point kFaceSteps[4] = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};

}  // namespace

DualGreens::DualGreens(const GridSubgraph& h) : h_(h) {
    const auto& fs = h_.faces();
    for (std::size_t i = 0; i < fs.size(); ++i) idx_[fs[i]] = static_cast<int>(i);
    std::vector<std::vector<Rational>> l(fs.size(), std::vector<Rational>(fs.size(), 0));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        l[i][i] = 4;
        for (Point d : kFaceSteps) {
            auto it = idx_.find(fs[i] + d);
            if (it != idx_.end()) l[i][it->second] = -1;
        }
    }
    inv_ = detail::exact_inverse(std::move(l));
}

Rational DualGreens::operator()(Point f, Point g) const {
    auto a = idx_.find(f), b = idx_.find(g);
    if (a == idx_.end() || b == idx_.end()) return Rational(0);
    return inv_[a->second][b->second];
}

Rational DualGreens::laplacian_at(Point f, Point g) const {
    Rational s = 4 * (*this)(f, g);
    for (Point d : kFaceSteps) s -= (*this)(f, g + d);
    return s;
}

QComplex coupling_via_greens(const DiscreteGreens& g, const DualGreens& dual, Point white, Point black) {
    if (is_black_cell(white) || !is_black_cell(black))
        throw Error(ErrorKind::ColorMismatch, "expected a white cell and a black cell");
    CellClass wc = cell_class(white), bc = cell_class(black);
    const Point ex{1, 0}, ey{0, 1};
    if (bc == CellClass::B0) {
        if (wc == CellClass::W0) return QComplex(g(black, white + ex) - g(black, white - ex), Rational(0));
        return QComplex(Rational(0), -(g(black, white + ey) - g(black, white - ey)));
    }
    if (wc == CellClass::W0) return QComplex(Rational(0), -(dual(black, white + ey) - dual(black, white - ey)));
    return QComplex(dual(black, white + ex) - dual(black, white - ex), Rational(0));
}

QComplex coupling_via_greens(const GridSubgraph& h, Point white, Point black) {
    return coupling_via_greens(DiscreteGreens(h), DualGreens(h), white, black);
}

namespace {

struct Segment {
    Point from, to;
    Point left, right;
    int inc;
};

// Unit segments with at least one adjacent cell, stored once per direction.
std::vector<Segment> segments_of(const Polyomino& p) {
    std::set<std::pair<Point, Point>> seen;
    std::vector<Segment> out;
    auto add = [&](Point a, Point d) {
        Point c = a + d;
        if (!seen.insert({std::min(a, c), std::max(a, c)}).second) return;
        Point left, right;
        if (d.x == 1) {
            left = a;
            right = {a.x, a.y - 1};
        } else {
            left = {a.x - 1, a.y};
            right = a;
        }
        out.push_back({a, c, left, right, is_black_cell(left) ? 1 : -1});
    };
    for (Point c : p.cells()) {
        add(c, {1, 0});
        add({c.x, c.y + 1}, {1, 0});
        add(c, {0, 1});
        add({c.x + 1, c.y}, {0, 1});
    }
    return out;
}

Point lowest_leftmost_corner(const Polyomino& p) {
    Point best = p.cells().front();
    for (Point c : p.cells())
        if (lower_left_less(c, best)) best = c;
    return best;
}

template <class T, class IncFn>
std::map<Point, T> integrate(const std::vector<Segment>& segs, Point anchor, IncFn inc_of) {
    std::map<Point, std::vector<std::pair<Point, T>>> adj;
    for (const auto& s : segs) {
        T d = inc_of(s);
        adj[s.from].push_back({s.to, d});
        adj[s.to].push_back({s.from, -d});
    }
    std::map<Point, T> h;
    h[anchor] = T(0);
    std::deque<Point> q{anchor};
    while (!q.empty()) {
        Point v = q.front();
        q.pop_front();
        for (auto& [w, d] : adj[v])
            if (!h.count(w)) {
                h[w] = h[v] + d;
                q.push_back(w);
            }
    }
    return h;
}

}  // namespace

HeightField height_function(const Polyomino& p, const Tiling& t) {
    std::map<Point, Point> partner;
    for (const auto& d : t) {
        Point diff = d.white - d.black;
        if (std::abs(diff.x) + std::abs(diff.y) != 1 || !p.contains(d.white) || !p.contains(d.black) ||
            is_black_cell(d.white) || !is_black_cell(d.black))
            throw Error(ErrorKind::InconsistentTiling, "domino is not a valid adjacent pair");
        if (partner.count(d.white) || partner.count(d.black))
            throw Error(ErrorKind::InconsistentTiling, "cell covered twice");
        partner[d.white] = d.black;
        partner[d.black] = d.white;
    }
    if (partner.size() != p.size()) throw Error(ErrorKind::InconsistentTiling, "tiling does not cover the region");
    auto segs = segments_of(p);
    auto interior = [&](const Segment& s) {
        auto it = partner.find(s.left);
        return it != partner.end() && it->second == s.right;
    };
    std::vector<Segment> open;
    for (const auto& s : segs)
        if (!interior(s)) open.push_back(s);
    HeightField f;
    f.anchor = lowest_leftmost_corner(p);
    f.values = integrate<int>(open, f.anchor, [](const Segment& s) { return s.inc; });
    for (const auto& s : segs) {
        if (!f.values.count(s.from) || !f.values.count(s.to))
            throw Error(ErrorKind::InconsistentTiling, "height undefined at a corner");
        int want = interior(s) ? -3 * s.inc : s.inc;
        if (f.values[s.to] - f.values[s.from] != want)
            throw Error(ErrorKind::InconsistentTiling, "height increments do not close up");
    }
    return f;
}

std::map<Point, Rational> average_height(const TemperleyanPolyomino& tp) {
    const Polyomino& p = tp.polyomino();
    KasteleynMatrix k = build_kasteleyn(p);
    CouplingMatrix c = coupling_matrix(k);
    auto prob = [&](const Segment& s) {
        if (!p.contains(s.left) || !p.contains(s.right)) return Rational(0);
        Domino d = is_black_cell(s.left) ? Domino{s.right, s.left} : Domino{s.left, s.right};
        return local_probability(c, k, {d});
    };
    return integrate<Rational>(segments_of(p), lowest_leftmost_corner(p),
                               [&](const Segment& s) -> Rational { return Rational(s.inc) * (1 - 4 * prob(s)); });
}

std::map<Point, Rational> average_height_enumeration(const Polyomino& p) {
    auto tilings = enumerate_tilings(p);
    if (tilings.empty()) throw Error(ErrorKind::InconsistentTiling, "region has no tilings");
    std::map<Point, Rational> sum;
    for (const auto& t : tilings)
        for (auto [v, h] : height_function(p, t).values) sum[v] += h;
    for (auto& [v, s] : sum) s /= static_cast<long>(tilings.size());
    return sum;
}

}  // namespace tilinglab

#include "tilinglab/kasteleyn.hpp"

#include <mpfr.h>

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "tilinglab/error.hpp"

namespace tilinglab {

namespace {

const Point kDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int find_sorted(const std::vector<std::pair<Point, int>>& v, Point p) {
    auto it = std::lower_bound(v.begin(), v.end(), p,
                               [](const std::pair<Point, int>& a, Point b) { return a.first < b; });
    if (it == v.end() || it->first != p) return -1;
    return it->second;
}

BigInt pivot_size(const GaussInt& g) { return g.norm(); }
BigInt pivot_size(const BigInt& b) { return abs(b); }
bool is_zero(const GaussInt& g) { return g.is_zero(); }
bool is_zero(const BigInt& b) { return sgn(b) == 0; }
GaussInt divexact(const GaussInt& a, const GaussInt& b) { return exact_div(a, b); }
BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
GaussInt negate(const GaussInt& g) { return {-g.re, -g.im}; }
BigInt negate(const BigInt& b) { return -b; }

template <class T>
T bareiss(std::vector<std::vector<T>> m, const T& one, const T& zero) {
    std::size_t n = m.size();
    if (n == 0) return one;
    T prev = one;
    bool negative = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        BigInt best = 0;
        for (std::size_t i = k; i < n; ++i) {
            if (is_zero(m[i][k])) continue;
            BigInt s = pivot_size(m[i][k]);
            if (piv == n || s > best) {
                best = s;
                piv = i;
            }
        }
        if (piv == n) return zero;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negative = !negative;
        }
        if (k + 1 == n) break;
        const T& pk = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const T& mik = m[i][k];
            bool zero_ik = is_zero(mik);
            for (std::size_t j = k + 1; j < n; ++j) {
                if (zero_ik) {
                    if (!is_zero(m[i][j])) m[i][j] = divexact(m[i][j] * pk, prev);
                } else {
                    m[i][j] = divexact(m[i][j] * pk - mik * m[k][j], prev);
                }
            }
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return negative ? negate(d) : d;
}

}  // namespace

int kasteleyn_power(Point white, Point black) {
    Point d = black - white;
    for (int k = 0; k < 4; ++k)
        if (d == kDirs[k]) return k;
    return -1;
}

KasteleynMatrix::KasteleynMatrix(std::vector<Point> whites, std::vector<Point> blacks,
                                 std::vector<std::vector<Entry>> rows)
    : whites_(std::move(whites)), blacks_(std::move(blacks)), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < whites_.size(); ++i) wlookup_.push_back({whites_[i], static_cast<int>(i)});
    for (std::size_t i = 0; i < blacks_.size(); ++i) blookup_.push_back({blacks_[i], static_cast<int>(i)});
    std::sort(wlookup_.begin(), wlookup_.end());
    std::sort(blookup_.begin(), blookup_.end());
}

int KasteleynMatrix::row_of(Point w) const { return find_sorted(wlookup_, w); }
int KasteleynMatrix::col_of(Point b) const { return find_sorted(blookup_, b); }

int KasteleynMatrix::power(int r, int c) const {
    for (const Entry& e : rows_[r])
        if (e.col == c) return e.power;
    return -1;
}

GaussInt KasteleynMatrix::entry(int r, int c) const {
    int p = power(r, c);
    switch (p) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    case 3: return {0, -1};
    default: return {0, 0};
    }
}

void KasteleynMatrix::flip(int r, int c) {
    for (Entry& e : rows_[r])
        if (e.col == c) e.power = (e.power + 2) % 4;
}

std::vector<std::vector<GaussInt>> KasteleynMatrix::dense() const {
    int n = dim();
    std::vector<std::vector<GaussInt>> m(n, std::vector<GaussInt>(blacks_.size()));
    for (int r = 0; r < n; ++r)
        for (const Entry& e : rows_[r]) m[r][e.col] = entry(r, e.col);
    return m;
}

Eigen::SparseMatrix<std::complex<double>> KasteleynMatrix::to_sparse() const {
    static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    for (int r = 0; r < dim(); ++r)
        for (const Entry& e : rows_[r]) trip.emplace_back(r, e.col, units[e.power]);
    Eigen::SparseMatrix<std::complex<double>> s(dim(), static_cast<int>(blacks_.size()));
    s.setFromTriplets(trip.begin(), trip.end());
    return s;
}

KasteleynMatrix build_kasteleyn(const Polyomino& p) {
    std::vector<Point> whites = p.whites(), blacks = p.blacks();
    if (whites.size() != blacks.size())
        throw Error(ErrorKind::UnbalancedColors, std::to_string(whites.size()) + " white vs " +
                                                     std::to_string(blacks.size()) + " black cells");
    std::map<Point, int> bidx;
    for (std::size_t i = 0; i < blacks.size(); ++i) bidx[blacks[i]] = static_cast<int>(i);
    std::vector<std::vector<KasteleynMatrix::Entry>> rows(whites.size());
    for (std::size_t r = 0; r < whites.size(); ++r)
        for (int k = 0; k < 4; ++k) {
            auto it = bidx.find(whites[r] + kDirs[k]);
            if (it != bidx.end()) rows[r].push_back({it->second, k});
        }
    return KasteleynMatrix(whites, blacks, rows);
}

GaussInt bareiss_determinant(std::vector<std::vector<GaussInt>> m) {
    return bareiss<GaussInt>(std::move(m), GaussInt(1), GaussInt(0));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    return bareiss<BigInt>(std::move(m), BigInt(1), BigInt(0));
}

BigInt count_tilings_exact(const KasteleynMatrix& k) {
    GaussInt d = bareiss_determinant(k.dense());
    BigInt n = d.norm(), root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (root * root != n) throw Error(ErrorKind::DomainError, "Kasteleyn determinant is not a unit multiple");
    return root;
}

namespace {

// log|det K| from a sparse LDLT of M = A^H A.
bool ldlt_logdet(const Eigen::SparseMatrix<std::complex<double>>& a, double& out) {
    Eigen::SparseMatrix<std::complex<double>> m = a.adjoint() * a;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<std::complex<double>>> ldlt(m);
    if (ldlt.info() != Eigen::Success) return false;
    auto d = ldlt.vectorD();
    double dmax = 0;
    for (int i = 0; i < d.size(); ++i) dmax = std::max(dmax, std::abs(d[i]));
    double s = 0;
    for (int i = 0; i < d.size(); ++i) {
        double v = d[i].real();
        if (!(v > 1e-12 * dmax)) return false;
        s += std::log(v);
    }
    out = 0.5 * s;
    return true;
}

}  // namespace

LogCount log_count_tilings(const KasteleynMatrix& k, int precision_bits) {
    LogCount out;
    if (k.dim() == 0) {
        out.method = "empty";
        return out;
    }
    if (precision_bits > 53 && k.dim() <= 1000) {
        BigInt c = count_tilings_exact(k);
        if (sgn(c) == 0) throw Error(ErrorKind::SingularMatrix, "region has no tilings");
        mpfr_t x;
        mpfr_init2(x, precision_bits);
        mpfr_set_z(x, c.get_mpz_t(), MPFR_RNDN);
        mpfr_log(x, x, MPFR_RNDN);
        out.value = mpfr_get_d(x, MPFR_RNDN);
        mpfr_clear(x);
        out.method = "exact+mpfr";
        out.error_bound = std::ldexp(std::abs(out.value), -52);
        return out;
    }
    auto a = k.to_sparse();
    double v1 = 0, v2 = 0;
    Eigen::SparseMatrix<std::complex<double>> at = a.adjoint();
    if (!ldlt_logdet(a, v1) || !ldlt_logdet(at, v2))
        throw Error(ErrorKind::SingularMatrix, "Kasteleyn matrix is singular");
    out.value = v1;
    out.method = "sparse_ldlt";
    // two independent factorizations (A^H A and A A^H) bound the rounding
    out.error_bound = std::abs(v1 - v2) + 1e-13 * k.dim();
    return out;
}

KasteleynMatrix kasteleyn_with_holes(const Polyomino& p, const HoleSpec& holes) {
    Point b = holes.removed_black, w = holes.removed_white;
    if (!p.contains(b)) throw Error(ErrorKind::CellMissing, "removed black cell not in region");
    if (!p.contains(w)) throw Error(ErrorKind::CellMissing, "removed white cell not in region");
    if (!is_black_cell(b) || is_black_cell(w)) throw Error(ErrorKind::HoleColorMismatch, "hole colors are wrong");
    const auto& path = holes.flip_path;
    if (path.empty()) throw Error(ErrorKind::InvalidPath, "empty flip path");
    auto touches_outside = [&](Point v) {
        for (int dx : {-1, 0})
            for (int dy : {-1, 0})
                if (!p.contains({v.x + dx, v.y + dy})) return true;
        return false;
    };
    if (!touches_outside(path.front())) throw Error(ErrorKind::InvalidPath, "path does not start on the outer boundary");
    Point e = path.back();
    if (e.x < w.x || e.x > w.x + 1 || e.y < w.y || e.y > w.y + 1)
        throw Error(ErrorKind::InvalidPath, "path does not end at a corner of the white hole");
    Polyomino q = p.without({b, w});
    KasteleynMatrix k = build_kasteleyn(q);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Point a = path[i], c = path[i + 1];
        Point d = c - a;
        if (std::abs(d.x) + std::abs(d.y) != 1) throw Error(ErrorKind::InvalidPath, "path steps must be unit steps");
        Point s1, s2;
        if (d.y == 0) {
            int x = std::min(a.x, c.x);
            s1 = {x, a.y};
            s2 = {x, a.y - 1};
        } else {
            int y = std::min(a.y, c.y);
            s1 = {a.x, y};
            s2 = {a.x - 1, y};
        }
        if (!q.contains(s1) || !q.contains(s2)) continue;
        Point white = is_black_cell(s1) ? s2 : s1;
        Point black = is_black_cell(s1) ? s1 : s2;
        k.flip(k.row_of(white), k.col_of(black));
    }
    return k;
}

KasteleynMatrix kasteleyn_with_holes(const TemperleyanPolyomino& p, const HoleSpec& holes) {
    if (p.polyomino().contains(holes.removed_black) && cell_class(holes.removed_black) != CellClass::B0)
        throw Error(ErrorKind::HoleColorMismatch, "removed black cell must be in B0");
    return kasteleyn_with_holes(p.polyomino(), holes);
}

namespace {

bool touches_outside(const Polyomino& p, Point v) {
    for (int dx : {-1, 0})
        for (int dy : {-1, 0})
            if (!p.contains({v.x + dx, v.y + dy})) return true;
    return false;
}

}  // namespace

std::vector<Point> default_flip_path(const Polyomino& p, Point w) {
    std::map<Point, Point> parent;
    std::deque<Point> queue;
    for (Point c : {Point{w.x, w.y}, Point{w.x + 1, w.y}, Point{w.x, w.y + 1}, Point{w.x + 1, w.y + 1}}) {
        parent[c] = c;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        Point v = queue.front();
        queue.pop_front();
        if (touches_outside(p, v)) {
            std::vector<Point> path{v};
            while (parent[v] != v) {
                v = parent[v];
                path.push_back(v);
            }
            return path;
        }
        for (Point d : kDirs) {
            Point u = v + d;
            if (!parent.count(u)) {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    throw Error(ErrorKind::InvalidPath, "no path to the boundary");
}

std::vector<Point> random_flip_path(const Polyomino& p, Point w, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> corner(0, 3);
    int c = corner(rng);
    Point v{w.x + (c & 1), w.y + (c >> 1)};
    std::vector<Point> walk{v};
    while (!touches_outside(p, v)) {
        v = v + kDirs[pick(rng)];
        walk.push_back(v);
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

namespace {

struct Enumerator {
    const Polyomino& p;
    std::vector<char> covered;
    Tiling current;
    std::vector<Tiling>* out = nullptr;
    std::size_t cap = 0;
    std::uint64_t count = 0;

    void place(int a, int b) {
        Point pa = p.cells()[a], pb = p.cells()[b];
        if (is_black_cell(pa)) current.push_back({pb, pa});
        else current.push_back({pa, pb});
    }

    void run(std::size_t from) {
        std::size_t n = p.size();
        while (from < n && covered[from]) ++from;
        if (from == n) {
            ++count;
            if (out) {
                if (out->size() >= cap) throw Error(ErrorKind::CapExceeded, "more tilings than the cap");
                out->push_back(current);
            }
            return;
        }
        Point c = p.cells()[from];
        covered[from] = 1;
        for (Point d : {Point{1, 0}, Point{0, 1}}) {
            int j = p.index_of(c + d);
            if (j < 0 || covered[j]) continue;
            covered[j] = 1;
            if (out) place(static_cast<int>(from), j);
            run(from + 1);
            if (out) current.pop_back();
            covered[j] = 0;
        }
        covered[from] = 0;
    }
};

}  // namespace

std::vector<Tiling> enumerate_tilings(const Polyomino& p, std::size_t cap) {
    std::vector<Tiling> out;
    if (p.size() % 2 == 1) return out;
    Enumerator e{p, std::vector<char>(p.size(), 0), {}, &out, cap};
    e.run(0);
    for (Tiling& t : out) std::sort(t.begin(), t.end());
    return out;
}

std::uint64_t count_tilings_enumeration(const Polyomino& p) {
    if (p.size() % 2 == 1) return 0;
    Enumerator e{p, std::vector<char>(p.size(), 0), {}, nullptr, 0};
    e.run(0);
    return e.count;
}

}  // namespace tilinglab

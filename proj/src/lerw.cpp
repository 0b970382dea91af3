#include "tilinglab/lerw.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "tilinglab/error.hpp"
#include "tilinglab/kasteleyn.hpp"

namespace tilinglab {

std::mt19937_64 keyed_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

int TreeSample::index_of(Point v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
}

namespace {

struct Adjacency {
    std::vector<Point> vertices;  // sorted
    std::vector<std::vector<int>> nb;

    explicit Adjacency(const GridSubgraph& h) : vertices(h.vertices()) {
        std::sort(vertices.begin(), vertices.end());
        nb.resize(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (Point w : h.neighbors(vertices[i])) nb[i].push_back(index(w));
    }
    int index(Point v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) return -1;
        return static_cast<int>(it - vertices.begin());
    }
    bool connected() const {
        std::vector<char> seen(vertices.size(), 0);
        std::deque<int> q{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : nb[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    q.push_back(w);
                }
        }
        return count == vertices.size();
    }
};

int pick(std::mt19937_64& rng, std::size_t n) {
    return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

std::pair<Point, Point> edge_ends(Point mid) {
    if (mid.x % 2 != 0) return {{mid.x - 1, mid.y}, {mid.x + 1, mid.y}};
    return {{mid.x, mid.y - 1}, {mid.x, mid.y + 1}};
}

}  // namespace

TreeSample sample_ust(const GridSubgraph& h, Point root, std::uint64_t seed) {
    Adjacency a(h);
    int r = a.index(root);
    if (r < 0) throw Error(ErrorKind::VertexMissing, "root is not a vertex");
    if (!a.connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
    const int n = static_cast<int>(a.vertices.size());
    TreeSample t;
    t.vertices = a.vertices;
    t.parent.assign(n, -1);
    t.root = r;
    t.seed = seed;
    std::vector<char> in_tree(n, 0);
    in_tree[r] = 1;
    auto rng = keyed_rng(seed, 0);
    for (int s = 0; s < n; ++s) {
        int v = s;
        while (!in_tree[v]) {
            int u = a.nb[v][pick(rng, a.nb[v].size())];
            t.parent[v] = u;
            v = u;
        }
        for (v = s; !in_tree[v]; v = t.parent[v]) in_tree[v] = 1;
    }
    return t;
}

LerwPath loop_erase(const std::vector<Point>& walk) {
    LerwPath p;
    std::map<Point, std::size_t> pos;
    for (Point v : walk) {
        auto it = pos.find(v);
        if (it != pos.end()) {
            for (std::size_t k = it->second + 1; k < p.vertices.size(); ++k) pos.erase(p.vertices[k]);
            p.vertices.resize(it->second + 1);
        } else {
            pos[v] = p.vertices.size();
            p.vertices.push_back(v);
        }
    }
    return p;
}

LerwPath branch(const TreeSample& tree, Point v) {
    int i = tree.index_of(v);
    if (i < 0) throw Error(ErrorKind::VertexMissing, "vertex not in the tree");
    LerwPath p;
    for (; i >= 0; i = tree.parent[i]) p.vertices.push_back(tree.vertices[i]);
    return p;
}

LerwPath sample_lerw(const GridSubgraph& h, Point source, Point target, std::uint64_t seed, std::uint64_t stream) {
    Adjacency a(h);
    int s = a.index(source), t = a.index(target);
    if (s < 0 || t < 0) throw Error(ErrorKind::VertexMissing, "endpoint is not a vertex");
    if (!a.connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
    auto rng = keyed_rng(seed, stream);
    std::vector<int> pos(a.vertices.size(), -1);
    std::vector<int> path{s};
    pos[s] = 0;
    int v = s;
    while (v != t) {
        v = a.nb[v][pick(rng, a.nb[v].size())];
        if (pos[v] >= 0) {
            for (std::size_t k = pos[v] + 1; k < path.size(); ++k) pos[path[k]] = -1;
            path.resize(pos[v] + 1);
        } else {
            pos[v] = static_cast<int>(path.size());
            path.push_back(v);
        }
    }
    LerwPath out;
    for (int i : path) out.vertices.push_back(a.vertices[i]);
    return out;
}

std::vector<std::vector<Point>> enumerate_spanning_trees(const GridSubgraph& h, std::size_t cap) {
    Adjacency a(h);
    const auto& edges = h.edges();
    const int n = static_cast<int>(a.vertices.size());
    std::vector<std::pair<int, int>> ends;
    for (Point e : edges) {
        auto [u, v] = edge_ends(e);
        ends.push_back({a.index(u), a.index(v)});
    }
    std::vector<std::vector<Point>> out;
    std::vector<Point> chosen;
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    // components by relabelling; graphs here are tiny
    auto rec = [&](auto&& self, std::size_t k, std::vector<int>& c) -> void {
        if (static_cast<int>(chosen.size()) == n - 1) {
            if (out.size() >= cap) throw Error(ErrorKind::CapExceeded, "too many spanning trees");
            out.push_back(chosen);
            return;
        }
        if (k == ends.size()) return;
        if (static_cast<int>(ends.size() - k) < n - 1 - static_cast<int>(chosen.size())) return;
        auto [u, v] = ends[k];
        if (c[u] != c[v]) {
            std::vector<int> next = c;
            int from = c[v], to = c[u];
            for (int& x : next)
                if (x == from) x = to;
            chosen.push_back(edges[k]);
            self(self, k + 1, next);
            chosen.pop_back();
        }
        self(self, k + 1, c);
    };
    if (n == 1) return {{}};
    rec(rec, 0, comp);
    return out;
}

TwoHoleCheck two_hole_bijection_check(const TemperleyanPolyomino& p, Point b, Point w) {
    if (cell_class(b) != CellClass::B0 || is_black_cell(w))
        throw Error(ErrorKind::HoleColorMismatch, "b must be a B0 cell and w a white cell");
    if (!p.polyomino().contains(b) || !p.polyomino().contains(w))
        throw Error(ErrorKind::CellMissing, "hole is not a cell of the region");
    GridSubgraph h = p.subgraph();
    if (!h.on_outer_face(b)) throw Error(ErrorKind::BNotOnBoundary, "b is an interior vertex");

    TwoHoleCheck r;
    HoleSpec holes{b, w, default_flip_path(p.polyomino(), w)};
    BigInt q = abs(count_tilings_exact(kasteleyn_with_holes(p, holes)));
    r.tilings_q = q.get_ui();

    Point root = h.base();
    for (const auto& tree : enumerate_spanning_trees(h)) {
        std::map<Point, std::vector<std::pair<Point, Point>>> adj;  // vertex -> (neighbour, edge)
        for (Point e : tree) {
            auto [u, v] = edge_ends(e);
            adj[u].push_back({v, e});
            adj[v].push_back({u, e});
        }
        std::map<Point, std::pair<Point, Point>> parent;  // vertex -> (parent, edge)
        std::deque<Point> queue{root};
        parent[root] = {root, root};
        while (!queue.empty()) {
            Point v = queue.front();
            queue.pop_front();
            for (auto [u, e] : adj[v])
                if (!parent.count(u)) {
                    parent[u] = {v, e};
                    queue.push_back(u);
                }
        }
        bool through = false;
        for (Point v = b; v != root; v = parent[v].first)
            if (parent[v].second == w) through = true;
        if (through) ++r.trees_through_w;
    }
    r.equal = r.tilings_q == r.trees_through_w;
    return r;
}

namespace {

// LERW from (0,0) in [0,width] x [-height,height], reflected at x = 0 and
// stopped on the other three sides. Reuses its position table across runs.
class HalfPlaneWalker {
public:
    HalfPlaneWalker(int width, int height)
        : w_(width), h_(height), stride_(width + 1), pos_(std::size_t(width + 1) * (2 * height + 1), -1) {}

    const std::vector<Point>& run(std::mt19937_64& rng) {
        for (Point v : path_) pos_[idx(v)] = -1;
        path_.assign(1, {0, 0});
        pos_[idx({0, 0})] = 0;
        Point v{0, 0};
        std::uint64_t bits = 0;
        int left = 0;
        for (;;) {
            int dir;
            do {
                if (left == 0) {
                    bits = rng();
                    left = 32;
                }
                dir = static_cast<int>(bits & 3);
                bits >>= 2;
                --left;
            } while (v.x == 0 && dir == 2);
            switch (dir) {
            case 0: ++v.x; break;
            case 1: ++v.y; break;
            case 2: --v.x; break;
            default: --v.y; break;
            }
            if (v.x == w_ || v.y == h_ || v.y == -h_) {
                path_.push_back(v);
                return path_;
            }
            int& p = pos_[idx(v)];
            if (p >= 0) {
                for (std::size_t k = p + 1; k < path_.size(); ++k) pos_[idx(path_[k])] = -1;
                path_.resize(p + 1);
            } else {
                p = static_cast<int>(path_.size());
                path_.push_back(v);
            }
        }
    }

private:
    std::size_t idx(Point v) const { return std::size_t(v.y + h_) * stride_ + v.x; }

    int w_, h_;
    std::size_t stride_;
    std::vector<int> pos_;
    std::vector<Point> path_;
};

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::vector<Point> half_plane_branch(int width, int height, std::mt19937_64& rng) {
    if (width < 1 || height < 1) throw Error(ErrorKind::DomainError, "box too small");
    HalfPlaneWalker walker(width, height);
    return walker.run(rng);
}

ExponentFit growth_exponent(const std::vector<int>& sizes, int samples_per_size, std::uint64_t seed, int bootstrap) {
    if (sizes.size() < 4) throw Error(ErrorKind::InsufficientSamples, "need at least 4 sizes");
    if (samples_per_size < 10 || bootstrap < 10) throw Error(ErrorKind::InsufficientSamples, "too few samples");
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < 2 || (i && sizes[i] <= sizes[i - 1]))
            throw Error(ErrorKind::DomainError, "sizes must be increasing and at least 2");
    ExponentFit fit;
    fit.sizes = sizes;
    fit.samples = samples_per_size;
    fit.seed = seed;
    std::vector<std::vector<double>> counts(sizes.size());
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const long n = sizes[s];
        HalfPlaneWalker walker(4 * n, 2 * n);
        double sum = 0, sq = 0;
        for (int k = 0; k < samples_per_size; ++k) {
            auto rng = keyed_rng(seed, (std::uint64_t(s) << 32) | std::uint64_t(k));
            const auto& path = walker.run(rng);
            long c = 0;
            for (Point v : path)
                if (long(v.x) * v.x + long(v.y) * v.y <= n * n) ++c;
            counts[s].push_back(static_cast<double>(c));
            sum += c;
            sq += double(c) * c;
        }
        double mean = sum / samples_per_size;
        double var = (sq - samples_per_size * mean * mean) / (samples_per_size - 1);
        fit.means.push_back(mean);
        fit.mean_errors.push_back(std::sqrt(std::max(var, 0.0) / samples_per_size));
    }
    std::vector<double> lx;
    for (int n : sizes) lx.push_back(std::log(static_cast<double>(n)));
    auto logs = [](const std::vector<double>& m) {
        std::vector<double> out;
        for (double v : m) out.push_back(std::log(v));
        return out;
    };
    fit.exponent = ls_slope(lx, logs(fit.means));
    auto rng = keyed_rng(seed, 0xb0075ull << 40);
    std::vector<double> slopes;
    for (int b = 0; b < bootstrap; ++b) {
        std::vector<double> means;
        for (const auto& c : counts) {
            double s = 0;
            for (std::size_t k = 0; k < c.size(); ++k) s += c[pick(rng, c.size())];
            means.push_back(s / c.size());
        }
        slopes.push_back(ls_slope(lx, logs(means)));
    }
    double m = 0, v = 0;
    for (double s : slopes) m += s;
    m /= slopes.size();
    for (double s : slopes) v += (s - m) * (s - m);
    fit.standard_error = std::sqrt(v / (slopes.size() - 1));
    return fit;
}

AngularProfile angular_profile(int n, int samples, int bins, std::uint64_t seed) {
    if (n < 64) throw Error(ErrorKind::DomainError, "N must be at least 64");
    if (samples < 10) throw Error(ErrorKind::InsufficientSamples, "too few samples");
    if (bins < 1) throw Error(ErrorKind::DomainError, "need at least one bin");
    const int half = n / 2;
    const double pi = std::numbers::pi;
    HalfPlaneWalker walker(n, half);
    std::vector<long> axis(n / 4 + 1, 0);
    // per-bin weights r^(3/4) summed per sample, for means and errors
    std::vector<double> bin_sum(bins, 0), bin_sq(bins, 0), bin_now(bins, 0);
    std::vector<long> bin_size(bins, 0);
    const double r_lo = n / 16.0, r_hi = n / 4.0;
    auto bin_of = [&](Point v) {
        double r = std::hypot(v.x, v.y);
        if (v.x <= 0 || r < r_lo || r > r_hi) return -1;
        double th = std::atan2(v.y, v.x);
        int b = static_cast<int>(std::floor((th + pi / 2) / pi * bins));
        return std::clamp(b, 0, bins - 1);
    };
    for (int y = -half; y <= half; ++y)
        for (int x = 1; x <= n; ++x) {
            int b = bin_of({x, y});
            if (b >= 0) ++bin_size[b];
        }
    for (int k = 0; k < samples; ++k) {
        auto rng = keyed_rng(seed, std::uint64_t(k));
        const auto& path = walker.run(rng);
        std::fill(bin_now.begin(), bin_now.end(), 0.0);
        for (Point v : path) {
            if (v.y == 0 && v.x >= 8 && v.x <= n / 4) ++axis[v.x];
            int b = bin_of(v);
            if (b >= 0) bin_now[b] += std::pow(std::hypot(v.x, v.y), 0.75);
        }
        for (int b = 0; b < bins; ++b) {
            bin_sum[b] += bin_now[b];
            bin_sq[b] += bin_now[b] * bin_now[b];
        }
    }
    AngularProfile out;
    out.n = n;
    out.samples = samples;
    std::vector<double> lx, ly;
    for (int x = 8; x <= n / 4; ++x) {
        double p = double(axis[x]) / samples;
        out.axis_r.push_back(x);
        out.axis_p.push_back(p);
        if (p > 0) {
            lx.push_back(std::log(double(x)));
            ly.push_back(std::log(p));
        }
    }
    if (lx.size() < 2) throw Error(ErrorKind::InsufficientSamples, "no hits on the axis");
    out.radial_slope = ls_slope(lx, ly);
    int zero = -1;
    for (int b = 0; b < bins; ++b) {
        AngularBin ab;
        ab.theta = -pi / 2 + (b + 0.5) * pi / bins;
        double m = bin_sum[b] / samples;
        double var = (bin_sq[b] / samples - m * m) * samples / std::max(1, samples - 1);
        double cells = std::max<long>(bin_size[b], 1);
        ab.value = m / cells;
        ab.error = std::sqrt(std::max(var, 0.0) / samples) / cells;
        ab.cos_quarter = std::pow(std::cos(ab.theta), 0.25);
        if (std::abs(ab.theta) < 1e-12) zero = b;
        out.bins.push_back(ab);
    }
    // without a centre bin normalise by the two bins around 0
    double ref;
    if (zero >= 0) {
        ref = out.bins[zero].value;
    } else {
        ref = 0.5 * (out.bins[bins / 2 - (bins > 1)].value + out.bins[bins / 2].value) /
              std::pow(std::cos(pi / (2 * bins)), 0.25);
    }
    for (auto& b : out.bins) b.ratio = ref > 0 ? b.value / ref : 0;
    return out;
}

RatioPoint ratio_point(double k_side, double eps, double alpha, double beta) {
    if (!(eps > 0) || !(alpha > 0) || !(k_side > 0)) throw Error(ErrorKind::DomainError, "parameters must be positive");
    int inv = static_cast<int>(std::lround(1 / eps));
    int side = static_cast<int>(std::lround(k_side * inv));
    int n = side / 2 + 1;
    int wx = static_cast<int>(std::lround(alpha * inv));
    if (wx % 2 == 0) ++wx;
    int yb = 2 * static_cast<int>(std::lround(beta * inv / 2));
    if (wx >= 2 * n - 2 || std::abs(yb) > n - 1) throw Error(ErrorKind::DomainError, "holes fall outside the square");
    std::vector<Point> cells;
    Point b0{2 * n - 2, 0};
    for (int y = -(n - 1); y <= n - 1; ++y)
        for (int x = 0; x <= 2 * n - 2; ++x)
            if (Point{x, y} != b0) cells.push_back({x, y});
    Polyomino p(cells);
    std::vector<Point> path;
    for (int x = 0; x <= wx; ++x) path.push_back({x, 0});
    KasteleynMatrix kq = kasteleyn_with_holes(p, HoleSpec{{0, yb}, {wx, 0}, path});
    LogCount lp = log_count_tilings(build_kasteleyn(p)), lq = log_count_tilings(kq);
    RatioPoint r;
    r.eps = 1.0 / inv;
    r.alpha = wx * r.eps;
    r.beta = yb * r.eps;
    r.log_ratio = lq.value - lp.value;
    r.error = lq.error_bound + lp.error_bound;
    return r;
}

RatioFit ratio_experiment(const std::vector<double>& alphas, const std::vector<double>& betas,
                          const std::vector<double>& eps_list, double k_side) {
    if (alphas.empty() || betas.empty() || eps_list.size() < 2)
        throw Error(ErrorKind::InsufficientSamples, "need parameter lists and at least two eps values");
    RatioFit fit;
    for (double e : eps_list)
        for (double a : alphas)
            for (double b : betas) fit.points.push_back(ratio_point(k_side, e, a, b));
    fit.radius_separated = std::any_of(fit.points.begin(), fit.points.end(), [](const RatioPoint& p) { return p.beta != 0; });
    const int cols = fit.radius_separated ? 4 : 3;
    Eigen::MatrixXd a(fit.points.size(), cols);
    Eigen::VectorXd y(fit.points.size());
    for (std::size_t i = 0; i < fit.points.size(); ++i) {
        const auto& p = fit.points[i];
        a(i, 0) = std::log(1 / p.eps);
        a(i, 1) = std::log(p.alpha);
        if (fit.radius_separated) a(i, 2) = std::log(p.alpha * p.alpha + p.beta * p.beta);
        a(i, cols - 1) = 1;
        y(i) = p.log_ratio;
    }
    Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
    fit.c_eps = c(0);
    fit.c_alpha = c(1);
    if (fit.radius_separated) fit.c_radius = c(2);
    fit.c_const = c(cols - 1);
    return fit;
}

}  // namespace tilinglab

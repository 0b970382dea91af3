#include "tilinglab/treelap.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "tilinglab/error.hpp"
#include "tilinglab/kasteleyn.hpp"

namespace tilinglab {

std::vector<std::vector<BigInt>> LaplacianMatrix::reduced_dense(int removed) const {
    int n = static_cast<int>(vertices.size());
    std::vector<int> map(n, -1);
    int k = 0;
    for (int i = 0; i < n; ++i)
        if (i != removed) map[i] = k++;
    std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k, 0));
    for (int i = 0; i < n; ++i) {
        if (map[i] < 0) continue;
        for (auto [j, v] : rows[i])
            if (map[j] >= 0) m[map[i]][map[j]] += v;
    }
    return m;
}

LaplacianMatrix laplacian(const GridSubgraph& h) {
    LaplacianMatrix l;
    l.vertices = h.vertices();
    l.rows.resize(l.vertices.size());
    for (std::size_t i = 0; i < l.vertices.size(); ++i) {
        auto nb = h.neighbors(l.vertices[i]);
        l.rows[i].push_back({static_cast<int>(i), static_cast<long>(nb.size())});
        for (Point w : nb) l.rows[i].push_back({h.vertex_index(w), -1});
    }
    return l;
}

BigInt spanning_tree_count(const GridSubgraph& h) {
    LaplacianMatrix l = laplacian(h);
    return bareiss_determinant(l.reduced_dense(h.vertex_index(h.base())));
}

BigInt spanning_tree_count(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw Error(ErrorKind::Disconnected, "empty graph");
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (auto [a, b] : edges) {
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
        m[a][a] += 1;
        m[b][b] += 1;
        m[a][b] -= 1;
        m[b][a] -= 1;
    }
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    if (count != n) throw Error(ErrorKind::Disconnected, "graph is disconnected");
    m.erase(m.begin());
    for (auto& row : m) row.erase(row.begin());
    return bareiss_determinant(m);
}

TemperleyCheck verify_temperley(const GridSubgraph& h) {
    TemperleyCheck c;
    c.trees = spanning_tree_count(h);
    TemperleyanPolyomino p = temperleyan_from_subgraph(h);
    c.tilings = p.size() == 0 ? BigInt(1) : count_tilings_exact(build_kasteleyn(p));
    c.equal = c.trees == c.tilings;
    return c;
}

BigFloat rectangle_log_trees(RectangleSpec spec, int bits) {
    if (spec.m < 1 || spec.n < 1) throw Error(ErrorKind::DomainError, "m and n must be positive");
    int wp = bits + 32;
    BigFloat pi = BigFloat::pi(wp);
    BigFloat two(2L, wp);
    auto side = [&](int len) {
        std::vector<BigFloat> v;
        for (int j = 0; j < len; ++j) {
            BigFloat ang = pi * BigFloat(static_cast<long>(j), wp) / BigFloat(static_cast<long>(len), wp);
            v.push_back(two - two * cos(ang));
        }
        return v;
    };
    std::vector<BigFloat> a = side(spec.m), b = side(spec.n);
    std::vector<BigFloat> terms;
    terms.reserve(static_cast<std::size_t>(spec.m) * spec.n);
    for (int j = 0; j < spec.m; ++j)
        for (int k = 0; k < spec.n; ++k) {
            if (j == 0 && k == 0) continue;
            terms.push_back(log(a[j] + b[k]));
        }
    std::sort(terms.begin(), terms.end());
    // pairwise summation over the sorted terms
    while (terms.size() > 1) {
        std::vector<BigFloat> next;
        next.reserve(terms.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2) next.push_back(terms.back());
        terms.swap(next);
    }
    BigFloat s = terms.empty() ? BigFloat(wp) : terms[0];
    BigFloat r = s - log(BigFloat(static_cast<long>(spec.m) * spec.n, wp));
    BigFloat out(bits);
    mpfr_set(out.get(), r.get(), MPFR_RNDN);
    return out;
}

BigFloat catalan_constant(int bits) {
    if (bits < 32) throw Error(ErrorKind::DomainError, "precision must be at least 32 bits");
    int wp = bits + 32;
    // G = (pi/8) log(2 + sqrt 3) + (3/8) sum_k (k!)^2 / ((2k)! (2k+1)^2)
    BigFloat c(1L, wp), sum(0L, wp);
    BigFloat tol(1L, wp);
    mpfr_mul_2si(tol.get(), tol.get(), -(bits + 16), MPFR_RNDN);
    for (long k = 0;; ++k) {
        BigFloat d(static_cast<long>((2 * k + 1) * (2 * k + 1)), wp);
        BigFloat t = c / d;
        sum = sum + t;
        if (t < tol) break;
        c = c * BigFloat(k + 1, wp) / BigFloat(2 * (2 * k + 1), wp);
    }
    BigFloat g = BigFloat::pi(wp) / BigFloat(8L, wp) * log(BigFloat(2L, wp) + sqrt(BigFloat(3L, wp))) +
                 BigFloat(3L, wp) / BigFloat(8L, wp) * sum;
    BigFloat out(bits);
    mpfr_set(out.get(), g.get(), MPFR_RNDN);
    return out;
}

BigFloat dedekind_eta(const BigFloat& q, int bits) {
    if (!(BigFloat(0L, 53) < q) || !(q < BigFloat(1L, 53)))
        throw Error(ErrorKind::DomainError, "eta nome must lie in (0, 1)");
    int wp = bits + 32;
    BigFloat qq(wp);
    mpfr_set(qq.get(), q.get(), MPFR_RNDN);
    BigFloat one(1L, wp);
    BigFloat gap = one - qq;
    BigFloat bound = one / (gap * gap);
    BigFloat tol(1L, wp);
    mpfr_mul_2si(tol.get(), tol.get(), -(bits + 8), MPFR_RNDN);
    BigFloat prod(1L, wp), qk = qq;
    // stop once the tail bound q^k / (1-q)^2 on |log prod_{j>=k}(1-q^j)| is below 2^-(bits+8)
    while (!(qk * bound < tol)) {
        prod = prod * (one - qk);
        qk = qk * qq;
    }
    BigFloat r = pow(qq, one / BigFloat(24L, wp)) * prod;
    BigFloat out(bits);
    mpfr_set(out.get(), r.get(), MPFR_RNDN);
    return out;
}

namespace {

BigFloat expansion_body(RectangleSpec spec, int wp) {
    if (spec.m < 2 || spec.n < 2) throw Error(ErrorKind::DomainError, "expansion needs m, n >= 2");
    BigFloat m(static_cast<long>(spec.m), wp), n(static_cast<long>(spec.n), wp);
    BigFloat pi = BigFloat::pi(wp);
    BigFloat g = catalan_constant(wp);
    BigFloat four(4L, wp), half = BigFloat(1L, wp) / BigFloat(2L, wp);
    BigFloat q = exp(-(BigFloat(2L, wp) * pi * n / m));
    return four * g * m * n / pi + (m + n) * log(sqrt(BigFloat(2L, wp)) - BigFloat(1L, wp)) - half * log(m) +
           log(dedekind_eta(q, wp));
}

BigFloat round_to(const BigFloat& x, int bits) {
    BigFloat out(bits);
    mpfr_set(out.get(), x.get(), MPFR_RNDN);
    return out;
}

}  // namespace

BigFloat rectform_expansion(RectangleSpec spec, int bits) {
    int wp = bits + 32;
    BigFloat c = BigFloat(5L, wp) / BigFloat(4L, wp) * BigFloat::log2(wp);
    return round_to(expansion_body(spec, wp) + c, bits);
}

BigFloat rectform_expansion_literal(RectangleSpec spec, int bits) {
    int wp = bits + 32;
    BigFloat c = BigFloat(1L, wp) / BigFloat(4L, wp) * BigFloat::log2(wp);
    return round_to(expansion_body(spec, wp) - c, bits);
}

}  // namespace tilinglab

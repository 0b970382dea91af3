#include "tilinglab/slitgreens.hpp"

#include <algorithm>
#include <cmath>

#include "tilinglab/error.hpp"

namespace tilinglab {

SlitBox::SlitBox(int m) : half_width(m) {
    if (m < 8) throw Error(ErrorKind::DomainError, "box half-width must be at least 8");
}

bool SlitField::in_box(int x, int y) const {
    int lo = -half_width + shift, hi = half_width + shift;
    return x >= lo && x <= hi && y >= -half_width && y <= half_width;
}

double SlitField::operator()(int x, int y) const {
    if (!in_box(x, y)) throw Error(ErrorKind::DomainError, "point outside the box");
    return grid.value[grid.index(x - shift + half_width + 1, y + half_width + 1)];
}

namespace {

// Grid with one node of frame outside the box; the box boundary nodes carry
// the outer value.
SlitField make_box(int m, int shift) {
    SlitField f;
    f.half_width = m;
    f.shift = shift;
    f.grid = MaskedGrid(2 * m + 3, 2 * m + 3);
    for (int j = 1; j <= 2 * m + 1; ++j)
        for (int i = 1; i <= 2 * m + 1; ++i)
            if (i > 1 && i < 2 * m + 1 && j > 1 && j < 2 * m + 1) f.grid.mask[f.grid.index(i, j)] = 1;
    return f;
}

}  // namespace

SlitField slit_greens(const SlitBox& box, double tol) {
    const int m = box.half_width;
    SlitField f = make_box(m, 0);
    for (int x = -m; x <= -1; ++x) f.grid.mask[f.grid.index(x + m + 1, m + 1)] = 0;
    std::vector<double> src(f.grid.size(), 0.0);
    src[f.grid.index(m + 1, m + 1)] = -1;
    f.solve = solve_grid(f.grid, src, tol);
    return f;
}

SlitField slit_fn(const SlitBox& box, int n, int shift, double tol) {
    const int m = box.half_width;
    if (n < 1) throw Error(ErrorKind::DomainError, "n must be positive");
    SlitField f = make_box(m, shift);
    for (int j = 1; j <= 2 * m + 1; ++j)
        for (int i = 1; i <= 2 * m + 1; ++i)
            if (f.grid.mask[f.grid.index(i, j)] == 0) f.grid.value[f.grid.index(i, j)] = 1;
    for (int x = -m + shift; x <= -1; ++x) {
        if (!f.in_box(x, 0)) continue;
        std::size_t c = f.grid.index(x - shift + m + 1, m + 1);
        f.grid.mask[c] = 0;
        f.grid.value[c] = x >= -n ? 0.0 : 1.0;
    }
    f.solve = solve_grid(f.grid, {}, tol);
    return f;
}

double FnConstruction::g(int x, int y) const { return fn(x, y) - fn1(x - 1, y); }

double FnConstruction::greens(int x, int y) const {
    return assembled[std::size_t(y + half_width) * (2 * half_width + 1) + (x + half_width)];
}

FnConstruction fn_construction(int n, const SlitBox& box) {
    const int m = box.half_width;
    if (4 * n >= m) throw Error(ErrorKind::DomainError, "need n < M/4");
    FnConstruction c{slit_fn(box, n, 0), slit_fn(box, n + 1, -1), 0, {}, m};
    c.laplacian_at_0 = c.g(1, 0) + c.g(-1, 0) + c.g(0, 1) + c.g(0, -1) - 4 * c.g(0, 0);
    double denom = c.fn1(0, 0) + c.fn1(-1, 1) + c.fn1(-1, -1);
    c.assembled.resize(std::size_t(2 * m + 1) * (2 * m + 1));
    for (int y = -m; y <= m; ++y)
        for (int x = -m; x <= m; ++x)
            c.assembled[std::size_t(y + m) * (2 * m + 1) + (x + m)] = -c.g(x, y) / denom;
    return c;
}

std::vector<double> slit_decay_profile(const SlitField& g, int lo, int hi) {
    if (lo < 1 || hi < lo || !g.in_box(hi, 0)) throw Error(ErrorKind::DomainError, "bad profile range");
    std::vector<double> out;
    for (int x = lo; x <= hi; ++x) out.push_back(std::abs(g(x, 0)) * std::sqrt(static_cast<double>(x)));
    return out;
}

double plateau_spread(const std::vector<double>& profile) {
    if (profile.empty()) throw Error(ErrorKind::DomainError, "empty profile");
    auto [lo, hi] = std::minmax_element(profile.begin(), profile.end());
    return *hi / *lo - 1;
}

}  // namespace tilinglab

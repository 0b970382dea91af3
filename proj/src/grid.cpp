#include "tilinglab/grid.hpp"

#include <algorithm>
#include <cmath>

#include "tilinglab/error.hpp"

namespace tilinglab {

std::size_t MaskedGrid::unknowns() const {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1.0));
}

namespace {

void check_frame(const MaskedGrid& g) {
    if (g.nx < 3 || g.ny < 3 || g.mask.size() != std::size_t(g.nx) * g.ny || g.value.size() != g.mask.size())
        throw Error(ErrorKind::DomainError, "grid arrays have the wrong shape");
    for (int i = 0; i < g.nx; ++i)
        if (g.mask[g.index(i, 0)] != 0 || g.mask[g.index(i, g.ny - 1)] != 0)
            throw Error(ErrorKind::DomainError, "unknown on the grid frame");
    for (int j = 0; j < g.ny; ++j)
        if (g.mask[g.index(0, j)] != 0 || g.mask[g.index(g.nx - 1, j)] != 0)
            throw Error(ErrorKind::DomainError, "unknown on the grid frame");
}

}  // namespace

CgResult solve_grid(MaskedGrid& g, const std::vector<double>& source, double tol, int max_iter,
                    const simd::Kernels& k) {
    check_frame(g);
    const std::size_t n = g.size(), w = static_cast<std::size_t>(g.nx);
    if (!source.empty() && source.size() != n) throw Error(ErrorKind::DomainError, "source has the wrong size");
    if (max_iter <= 0) max_iter = 20 * (g.nx + g.ny) + 1000;

    // b = source + Dirichlet neighbours, x holds unknowns only
    std::vector<double> fixed(n), x(n, 0.0), b(n), r(n), p(n), ap(n);
    for (std::size_t i = 0; i < n; ++i) fixed[i] = g.mask[i] == 1.0 ? 0.0 : g.value[i];
    k.laplace(b.data(), fixed.data(), g.mask.data(), w, n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = g.mask[i] * ((source.empty() ? 0.0 : source[i]) - b[i]);
        x[i] = g.mask[i] * g.value[i];
    }
    k.laplace(r.data(), x.data(), g.mask.data(), w, n);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - g.mask[i] * r[i];
    for (std::size_t i = 0; i < w; ++i) r[i] = r[n - 1 - i] = 0;

    CgResult res;
    double bnorm = std::sqrt(k.dot(b.data(), b.data(), n));
    if (bnorm == 0) bnorm = 1;
    double rr = k.dot(r.data(), r.data(), n);
    p = r;
    int it = 0;
    while (std::sqrt(rr) > tol * bnorm && it < max_iter) {
        k.laplace(ap.data(), p.data(), g.mask.data(), w, n);
        double pap = k.dot(p.data(), ap.data(), n);
        double alpha = rr / pap;
        k.axpy(x.data(), alpha, p.data(), n);
        k.axpy(r.data(), -alpha, ap.data(), n);
        double rr2 = k.dot(r.data(), r.data(), n);
        k.xpby(p.data(), r.data(), rr2 / rr, n);
        rr = rr2;
        ++it;
    }
    res.iterations = it;
    res.relative_residual = std::sqrt(rr) / bnorm;
    res.converged = std::sqrt(rr) <= tol * bnorm;
    for (std::size_t i = 0; i < n; ++i)
        if (g.mask[i] == 1.0) g.value[i] = x[i];
    return res;
}

double grid_residual(const MaskedGrid& g, const std::vector<double>& source) {
    double worst = 0;
    const int w = g.nx;
    for (int j = 1; j + 1 < g.ny; ++j)
        for (int i = 1; i + 1 < g.nx; ++i) {
            std::size_t c = g.index(i, j);
            if (g.mask[c] != 1.0) continue;
            const double* u = g.value.data();
            double lap = 4 * u[c] - u[c - 1] - u[c + 1] - u[c - w] - u[c + w];
            double s = source.empty() ? 0.0 : source[c];
            worst = std::max(worst, std::abs(lap - s));
        }
    return worst;
}

}  // namespace tilinglab

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tilinglab/error.hpp"
#include "tilinglab/grid.hpp"
#include "tilinglab/simd.hpp"

using namespace tilinglab;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

MaskedGrid box(int nx, int ny) {
    MaskedGrid g(nx, ny);
    for (int j = 1; j + 1 < ny; ++j)
        for (int i = 1; i + 1 < nx; ++i) g.mask[g.index(i, j)] = 1;
    return g;
}

}  // namespace

TEST(Simd, ActiveKernelsResolve) {
    const auto& k = simd::active_kernels();
    EXPECT_TRUE(std::string(k.name) == "scalar" || std::string(k.name) == "avx2");
    if (!__builtin_cpu_supports("avx2")) EXPECT_EQ(simd::avx2_kernels(), nullptr);
}

TEST(Simd, Avx2MatchesScalar) {
    const simd::Kernels* v = simd::avx2_kernels();
    if (!v) GTEST_SKIP() << "no AVX2 on this machine";
    const simd::Kernels& s = simd::scalar_kernels();
    std::mt19937_64 rng(11);
    for (std::size_t w : {3u, 5u, 8u, 13u, 64u}) {
        for (std::size_t rows : {3u, 4u, 7u}) {
            std::size_t n = w * rows;
            auto x = random_vec(n, rng), y = random_vec(n, rng), mask = random_vec(n, rng);
            for (auto& m : mask) m = m > 0 ? 1.0 : 0.0;
            std::vector<double> o1(n, 7.0), o2(n, 7.0);
            s.laplace(o1.data(), x.data(), mask.data(), w, n);
            v->laplace(o2.data(), x.data(), mask.data(), w, n);
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(o1[i], o2[i], 1e-14);
            EXPECT_EQ(o2[0], 7.0);
            EXPECT_EQ(o2[n - 1], 7.0);

            EXPECT_NEAR(s.dot(x.data(), y.data(), n), v->dot(x.data(), y.data(), n), 1e-13);

            auto a1 = y, a2 = y;
            s.axpy(a1.data(), 0.37, x.data(), n);
            v->axpy(a2.data(), 0.37, x.data(), n);
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a1[i], a2[i], 1e-15);

            a1 = y;
            a2 = y;
            s.xpby(a1.data(), x.data(), -1.3, n);
            v->xpby(a2.data(), x.data(), -1.3, n);
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a1[i], a2[i], 1e-15);

            EXPECT_NEAR(s.grad_energy(x.data(), mask.data(), w, n), v->grad_energy(x.data(), mask.data(), w, n), 1e-12);
        }
    }
}

TEST(Simd, GradEnergyOfLinearFunction) {
    // u = 2x + 3y on unit spacing: |grad u|^2 = 13 per cell
    int w = 9, rows = 6;
    std::vector<double> u(w * rows), weight(w * rows, 1.0);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < w; ++i) u[j * w + i] = 2 * i + 3 * j;
    for (int i = 0; i < w; ++i) weight[(rows - 1) * w + i] = 0;
    for (int j = 0; j < rows; ++j) weight[j * w + w - 1] = 0;
    double cells = (w - 1) * (rows - 1);
    EXPECT_DOUBLE_EQ(simd::scalar_kernels().grad_energy(u.data(), weight.data(), w, u.size()), 13 * cells);
    EXPECT_DOUBLE_EQ(simd::active_kernels().grad_energy(u.data(), weight.data(), w, u.size()), 13 * cells);
}

TEST(Grid, LinearDataIsReproduced) {
    MaskedGrid g = box(40, 30);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (g.mask[g.index(i, j)] == 0) g.value[g.index(i, j)] = 0.5 * i - 0.25 * j + 3;
    CgResult r = solve_grid(g, {});
    EXPECT_TRUE(r.converged);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) EXPECT_NEAR(g.value[g.index(i, j)], 0.5 * i - 0.25 * j + 3, 1e-8);
    EXPECT_LT(grid_residual(g, {}), 1e-8);
}

TEST(Grid, PoissonScalarAndAvx2Agree) {
    MaskedGrid g = box(33, 21);
    // punch a hole to exercise the mask
    for (int j = 8; j < 12; ++j)
        for (int i = 10; i < 14; ++i) {
            g.mask[g.index(i, j)] = 0;
            g.value[g.index(i, j)] = 1;
        }
    std::vector<double> src(g.size(), 0.0);
    src[g.index(25, 5)] = 1;
    MaskedGrid a = g, b = g;
    CgResult ra = solve_grid(a, src, 1e-12, 0, simd::scalar_kernels());
    EXPECT_TRUE(ra.converged);
    EXPECT_LT(grid_residual(a, src), 1e-10);
    if (const auto* v = simd::avx2_kernels()) {
        CgResult rb = solve_grid(b, src, 1e-12, 0, *v);
        EXPECT_TRUE(rb.converged);
        for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(a.value[i], b.value[i], 1e-10);
    }
    // fixed values untouched
    EXPECT_EQ(a.value[g.index(11, 9)], 1.0);
    EXPECT_EQ(a.value[g.index(0, 0)], 0.0);
}

TEST(Grid, MaximumPrinciple) {
    MaskedGrid g = box(25, 25);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 5);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.mask[i] == 0) g.value[i] = u(rng);
    solve_grid(g, {});
    double lo = 1e9, hi = -1e9;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.mask[i] == 0) {
            lo = std::min(lo, g.value[i]);
            hi = std::max(hi, g.value[i]);
        }
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_GE(g.value[i], lo - 1e-9);
        EXPECT_LE(g.value[i], hi + 1e-9);
    }
}

TEST(Grid, UnknownOnFrameRejected) {
    MaskedGrid g(10, 10);
    g.mask[g.index(0, 4)] = 1;
    EXPECT_THROW(solve_grid(g, {}), Error);
    MaskedGrid h(2, 10);
    EXPECT_THROW(solve_grid(h, {}), Error);
}

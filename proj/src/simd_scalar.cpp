#include <cstdlib>
#include <cstring>

#include "tilinglab/simd.hpp"

namespace tilinglab::simd {

namespace {

void laplace(double* out, const double* x, const double* mask, std::size_t w, std::size_t n) {
    for (std::size_t i = w; i + w < n; ++i)
        out[i] = mask[i] * (4 * x[i] - x[i - 1] - x[i + 1] - x[i - w] - x[i + w]);
}

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpby(double* y, const double* x, double b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

double grad_energy(const double* u, const double* weight, std::size_t w, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i + w + 1 < n; ++i) {
        if (weight[i] == 0) continue;
        double gx = (u[i + 1] - u[i]) + (u[i + w + 1] - u[i + w]);
        double gy = (u[i + w] - u[i]) + (u[i + w + 1] - u[i + 1]);
        s += weight[i] * 0.25 * (gx * gx + gy * gy);
    }
    return s;
}

const Kernels kScalar{"scalar", laplace, dot, axpy, xpby, grad_energy};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active_kernels() {
    static const Kernels* k = [] {
        const char* env = std::getenv("TILINGLAB_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
        const Kernels* a = avx2_kernels();
        return a ? a : &kScalar;
    }();
    return *k;
}

}  // namespace tilinglab::simd

#pragma once

#include <cstddef>

namespace tilinglab::simd {

// Grid kernels over row-major arrays with row stride w. Node i is an unknown
// when mask[i] == 1; the first and last rows are never touched by laplace.
struct Kernels {
    const char* name;
    // out[i] = mask[i] * (4 x[i] - x[i-1] - x[i+1] - x[i-w] - x[i+w]) for w <= i < n - w
    void (*laplace)(double* out, const double* x, const double* mask, std::size_t w, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += a * x
    void (*axpy)(double* y, double a, const double* x, std::size_t n);
    // y = x + b * y
    void (*xpby)(double* y, const double* x, double b, std::size_t n);
    // sum over cells i < n - w - 1 of weight[i] * |grad u|^2 * h^2, using the
    // 2x2 node stencil with lower-left node i
    double (*grad_energy)(const double* u, const double* weight, std::size_t w, std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the CPU (or the build) has no AVX2.
const Kernels* avx2_kernels();
// AVX2 when available unless TILINGLAB_SIMD=scalar.
const Kernels& active_kernels();

}  // namespace tilinglab::simd

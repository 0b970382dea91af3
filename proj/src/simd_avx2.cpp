#include "tilinglab/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TILINGLAB_HAVE_AVX2 1
#endif

namespace tilinglab::simd {

#ifdef TILINGLAB_HAVE_AVX2

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

void laplace(double* out, const double* x, const double* mask, std::size_t w, std::size_t n) {
    if (n < 2 * w) return;
    std::size_t i = w, end = n - w;
    const __m256d four = _mm256_set1_pd(4.0);
    for (; i + 4 <= end; i += 4) {
        __m256d c = _mm256_loadu_pd(x + i);
        __m256d s = _mm256_add_pd(_mm256_add_pd(_mm256_loadu_pd(x + i - 1), _mm256_loadu_pd(x + i + 1)),
                                  _mm256_add_pd(_mm256_loadu_pd(x + i - w), _mm256_loadu_pd(x + i + w)));
        __m256d r = _mm256_fmsub_pd(four, c, s);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(mask + i), r));
    }
    for (; i < end; ++i) out[i] = mask[i] * (4 * x[i] - x[i - 1] - x[i + 1] - x[i - w] - x[i + w]);
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double* y, double a, const double* x, std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void xpby(double* y, const double* x, double b, std::size_t n) {
    __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vb, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] = x[i] + b * y[i];
}

double grad_energy(const double* u, const double* weight, std::size_t w, std::size_t n) {
    if (n < w + 1) return 0;
    std::size_t end = n - w - 1, i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= end; i += 4) {
        __m256d a = _mm256_loadu_pd(u + i), b = _mm256_loadu_pd(u + i + 1);
        __m256d c = _mm256_loadu_pd(u + i + w), d = _mm256_loadu_pd(u + i + w + 1);
        __m256d gx = _mm256_add_pd(_mm256_sub_pd(b, a), _mm256_sub_pd(d, c));
        __m256d gy = _mm256_add_pd(_mm256_sub_pd(c, a), _mm256_sub_pd(d, b));
        __m256d g2 = _mm256_fmadd_pd(gx, gx, _mm256_mul_pd(gy, gy));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(weight + i), g2, acc);
    }
    double s = 0.25 * hsum(acc);
    for (; i < end; ++i) {
        if (weight[i] == 0) continue;
        double gx = (u[i + 1] - u[i]) + (u[i + w + 1] - u[i + w]);
        double gy = (u[i + w] - u[i]) + (u[i + w + 1] - u[i + 1]);
        s += weight[i] * 0.25 * (gx * gx + gy * gy);
    }
    return s;
}

const Kernels kAvx2{"avx2", laplace, dot, axpy, xpby, grad_energy};

}  // namespace

const Kernels* avx2_kernels() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &kAvx2 : nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace tilinglab::simd

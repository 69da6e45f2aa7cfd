// AVX2+FMA variants of the dense kernels. Compiled with -mavx2 -mfma and only
// ever called after a runtime cpuid check.

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "gonet/kernels.hpp"

namespace gonet::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
    return _mm256_and_pd(v, mask);
}

}  // namespace

void matvec(double* y, const double* a, const double* x, int n) {
    std::memset(y, 0, sizeof(double) * n);
    for (int j = 0; j < n; ++j) {
        const double* col = a + static_cast<size_t>(j) * n;
        const __m256d xj = _mm256_set1_pd(x[j]);
        int i = 0;
        for (; i + 8 <= n; i += 8) {
            __m256d y0 = _mm256_loadu_pd(y + i);
            __m256d y1 = _mm256_loadu_pd(y + i + 4);
            y0 = _mm256_fmadd_pd(xj, _mm256_loadu_pd(col + i), y0);
            y1 = _mm256_fmadd_pd(xj, _mm256_loadu_pd(col + i + 4), y1);
            _mm256_storeu_pd(y + i, y0);
            _mm256_storeu_pd(y + i + 4, y1);
        }
        for (; i + 4 <= n; i += 4) {
            __m256d y0 = _mm256_loadu_pd(y + i);
            y0 = _mm256_fmadd_pd(xj, _mm256_loadu_pd(col + i), y0);
            _mm256_storeu_pd(y + i, y0);
        }
        for (; i < n; ++i)
            y[i] += x[j] * col[i];
    }
}

double l1_norm(const double* x, int n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    int i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, abs_pd(_mm256_loadu_pd(x + i)));
        acc1 = _mm256_add_pd(acc1, abs_pd(_mm256_loadu_pd(x + i + 4)));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        s += std::fabs(x[i]);
    return s;
}

double l1_diff(const double* x, const double* y, int n) {
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, abs_pd(d));
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += std::fabs(x[i] - y[i]);
    return s;
}

double l2_norm(const double* x, int n) {
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i] * x[i];
    return std::sqrt(s);
}

double dot(const double* x, const double* y, int n) {
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

void scale(double* x, int n, double s) {
    const __m256d vs = _mm256_set1_pd(s);
    int i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vs));
    for (; i < n; ++i)
        x[i] *= s;
}

void axpy(double* y, const double* x, int n, double alpha) {
    const __m256d va = _mm256_set1_pd(alpha);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), yv);
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

}  // namespace gonet::kernels::avx2

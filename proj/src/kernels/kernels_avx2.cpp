// AVX2/FMA kernel variant (x86-64, float64 build). Compiled with -mavx2 -mfma;
// only registered when the CPU reports AVX2 support at runtime.

#if defined(__x86_64__) && !defined(IMSEG_SINGLE_PRECISION)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "imseg/kernels.hpp"

namespace imseg::kern {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

void add_v(const real* a, const real* b, real* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                                _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_v(const real* a, const real* b, real* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i),
                                                _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_v(const real* a, const real* b, real* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                                _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_v(real alpha, const real* x, real* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(y + i);
        acc = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), acc);
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_v(real alpha, const real* x, real* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) y[i] = alpha * x[i];
}

real dot_v(const real* a, const real* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    real tail = 0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return hsum(acc) + tail;
}

real sum_v(const real* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    }
    real tail = 0;
    for (; i < n; ++i) tail += a[i];
    return hsum(acc) + tail;
}

void relu_v(const real* x, real* y, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_max_pd(zero, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) y[i] = x[i] > real(0) ? x[i] : real(0);
}

// Row formulation of direct convolution: for unit horizontal stride each
// (ci,ky,kx) contributes an axpy of one shifted input row into one output row,
// which keeps the per-pixel accumulation order identical to the scalar kernel.
void conv2d_v(const ConvDims& d, const real* in, const real* w,
              const real* bias, real* out) {
    if (d.sw != 1) {
        scalar_kernels().conv2d(d, in, w, bias, out);
        return;
    }
    const int cing = d.cin / d.groups;
    const int coutg = d.cout / d.groups;
    const std::size_t plane_out = static_cast<std::size_t>(d.ho) * d.wo;
    for (int in_n = 0; in_n < d.n; ++in_n) {
        for (int co = 0; co < d.cout; ++co) {
            const int g = co / coutg;
            real* outp = out + (static_cast<std::size_t>(in_n) * d.cout + co) * plane_out;
            const real b = bias ? bias[co] : real(0);
            const __m256d vb = _mm256_set1_pd(b);
            std::size_t i = 0;
            for (; i + 4 <= plane_out; i += 4) _mm256_storeu_pd(outp + i, vb);
            for (; i < plane_out; ++i) outp[i] = b;
            for (int ci = 0; ci < cing; ++ci) {
                const real* inp =
                    in + (static_cast<std::size_t>(in_n) * d.cin + g * cing + ci) *
                             d.hp * d.wp;
                const real* wp =
                    w + (static_cast<std::size_t>(co) * cing + ci) * d.kh * d.kw;
                for (int ky = 0; ky < d.kh; ++ky) {
                    for (int kx = 0; kx < d.kw; ++kx) {
                        const real wv = wp[static_cast<std::size_t>(ky) * d.kw + kx];
                        if (wv == real(0)) continue;
                        for (int oy = 0; oy < d.ho; ++oy) {
                            const real* row =
                                inp + static_cast<std::size_t>(oy * d.sh + ky) * d.wp + kx;
                            axpy_v(wv, row, outp + static_cast<std::size_t>(oy) * d.wo,
                                   static_cast<std::size_t>(d.wo));
                        }
                    }
                }
            }
        }
    }
}

void scan_v(const ScanDims& d, const real* u, const real* delta, const real* A,
            const real* bt, const real* ct, const real* D, real* y,
            real* h_hist) {
    const int L = d.L, ns = d.n_state;
    std::vector<real> h(static_cast<std::size_t>(ns));
    std::vector<real> da(static_cast<std::size_t>(ns));
    for (int i = 0; i < d.d_inner; ++i) {
        const real* ui = u + static_cast<std::size_t>(i) * L;
        const real* di = delta + static_cast<std::size_t>(i) * L;
        const real* ai = A + static_cast<std::size_t>(i) * ns;
        real* yi = y + static_cast<std::size_t>(i) * L;
        for (int s = 0; s < ns; ++s) h[s] = 0;
        for (int t = 0; t < L; ++t) {
            const real dt = di[t];
            const real du = dt * ui[t];
            for (int s = 0; s < ns; ++s) da[s] = std::exp(dt * ai[s]);
            const real* b = bt + static_cast<std::size_t>(t) * ns;
            const real* c = ct + static_cast<std::size_t>(t) * ns;
            const __m256d vdu = _mm256_set1_pd(du);
            __m256d vacc = _mm256_setzero_pd();
            int s = 0;
            for (; s + 4 <= ns; s += 4) {
                __m256d vh = _mm256_loadu_pd(h.data() + s);
                vh = _mm256_mul_pd(_mm256_loadu_pd(da.data() + s), vh);
                vh = _mm256_fmadd_pd(vdu, _mm256_loadu_pd(b + s), vh);
                _mm256_storeu_pd(h.data() + s, vh);
                vacc = _mm256_fmadd_pd(_mm256_loadu_pd(c + s), vh, vacc);
            }
            real acc = hsum(vacc);
            for (; s < ns; ++s) {
                h[s] = da[s] * h[s] + du * b[s];
                acc += c[s] * h[s];
            }
            yi[t] = acc + D[i] * ui[t];
            if (h_hist) {
                real* hh = h_hist + (static_cast<std::size_t>(i) * L + t) * ns;
                for (int k = 0; k < ns; ++k) hh[k] = h[k];
            }
        }
    }
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels k = {
        "avx2", add_v, sub_v, mul_v, axpy_v, scale_v,
        dot_v,  sum_v, relu_v, conv2d_v, scan_v,
    };
    return &k;
}

}  // namespace imseg::kern

#else

namespace imseg::kern {
struct Kernels;
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace imseg::kern

#endif

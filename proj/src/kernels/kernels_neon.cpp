// NEON kernel variant (aarch64, float64 build). Mirrors the AVX2 variant with
// 2-wide float64 vectors.

#if defined(__aarch64__) && !defined(IMSEG_SINGLE_PRECISION)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

#include "imseg/kernels.hpp"

namespace imseg::kern {
namespace {

void add_v(const real* a, const real* b, real* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_v(const real* a, const real* b, real* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_v(const real* a, const real* b, real* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_v(real alpha, const real* x, real* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_v(real alpha, const real* x, real* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vmulq_f64(va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] = alpha * x[i];
}

real dot_v(const real* a, const real* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    real tail = 0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return vaddvq_f64(acc) + tail;
}

real sum_v(const real* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
    real tail = 0;
    for (; i < n; ++i) tail += a[i];
    return vaddvq_f64(acc) + tail;
}

void relu_v(const real* x, real* y, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vmaxq_f64(zero, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] = x[i] > real(0) ? x[i] : real(0);
}

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
            for (std::size_t i = 0; i < plane_out; ++i) outp[i] = b;
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
            const float64x2_t vdu = vdupq_n_f64(du);
            float64x2_t vacc = vdupq_n_f64(0.0);
            int s = 0;
            for (; s + 2 <= ns; s += 2) {
                float64x2_t vh = vmulq_f64(vld1q_f64(da.data() + s),
                                           vld1q_f64(h.data() + s));
                vh = vfmaq_f64(vh, vdu, vld1q_f64(b + s));
                vst1q_f64(h.data() + s, vh);
                vacc = vfmaq_f64(vacc, vld1q_f64(c + s), vh);
            }
            real acc = vaddvq_f64(vacc);
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

const Kernels* neon_kernels() {
    static const Kernels k = {
        "neon", add_v, sub_v, mul_v, axpy_v, scale_v,
        dot_v,  sum_v, relu_v, conv2d_v, scan_v,
    };
    return &k;
}

}  // namespace imseg::kern

#else

namespace imseg::kern {
struct Kernels;
const Kernels* neon_kernels() { return nullptr; }
}  // namespace imseg::kern

#endif

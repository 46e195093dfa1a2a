// Scalar reference kernels. These are the semantic ground truth the SIMD
// variants are tested against; keep them simple and obviously correct.

#include <cmath>
#include <cstddef>

#include "imseg/kernels.hpp"

namespace imseg::kern {
namespace {

void add_s(const real* a, const real* b, real* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_s(const real* a, const real* b, real* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_s(const real* a, const real* b, real* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_s(real alpha, const real* x, real* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_s(real alpha, const real* x, real* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

real dot_s(const real* a, const real* b, std::size_t n) {
    real acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

real sum_s(const real* a, std::size_t n) {
    real acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

void relu_s(const real* x, real* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > real(0) ? x[i] : real(0);
}

void conv2d_s(const ConvDims& d, const real* in, const real* w,
              const real* bias, real* out) {
    const int cing = d.cin / d.groups;
    const int coutg = d.cout / d.groups;
    for (int in_n = 0; in_n < d.n; ++in_n) {
        for (int co = 0; co < d.cout; ++co) {
            const int g = co / coutg;
            const real b = bias ? bias[co] : real(0);
            real* outp = out + (static_cast<std::size_t>(in_n) * d.cout + co) *
                                   d.ho * d.wo;
            for (int oy = 0; oy < d.ho; ++oy) {
                for (int ox = 0; ox < d.wo; ++ox) {
                    real acc = b;
                    for (int ci = 0; ci < cing; ++ci) {
                        const real* inp =
                            in + (static_cast<std::size_t>(in_n) * d.cin +
                                  g * cing + ci) *
                                     d.hp * d.wp;
                        const real* wp =
                            w + ((static_cast<std::size_t>(co) * cing + ci) *
                                 d.kh) *
                                    d.kw;
                        for (int ky = 0; ky < d.kh; ++ky) {
                            const real* row =
                                inp + static_cast<std::size_t>(oy * d.sh + ky) *
                                          d.wp +
                                ox * d.sw;
                            const real* wrow = wp + static_cast<std::size_t>(ky) * d.kw;
                            for (int kx = 0; kx < d.kw; ++kx) {
                                acc += wrow[kx] * row[kx];
                            }
                        }
                    }
                    outp[static_cast<std::size_t>(oy) * d.wo + ox] = acc;
                }
            }
        }
    }
}

void scan_s(const ScanDims& d, const real* u, const real* delta, const real* A,
            const real* bt, const real* ct, const real* D, real* y,
            real* h_hist) {
    const int L = d.L, ns = d.n_state;
    std::vector<real> h(static_cast<std::size_t>(ns));
    for (int i = 0; i < d.d_inner; ++i) {
        const real* ui = u + static_cast<std::size_t>(i) * L;
        const real* di = delta + static_cast<std::size_t>(i) * L;
        const real* ai = A + static_cast<std::size_t>(i) * ns;
        real* yi = y + static_cast<std::size_t>(i) * L;
        for (int s = 0; s < ns; ++s) h[s] = 0;
        for (int t = 0; t < L; ++t) {
            const real dt = di[t];
            const real du = dt * ui[t];
            const real* b = bt + static_cast<std::size_t>(t) * ns;
            const real* c = ct + static_cast<std::size_t>(t) * ns;
            real acc = 0;
            for (int s = 0; s < ns; ++s) {
                h[s] = std::exp(dt * ai[s]) * h[s] + du * b[s];
                acc += c[s] * h[s];
            }
            yi[t] = acc + D[i] * ui[t];
            if (h_hist) {
                real* hh = h_hist + (static_cast<std::size_t>(i) * L + t) * ns;
                for (int s = 0; s < ns; ++s) hh[s] = h[s];
            }
        }
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {
        "scalar", add_s, sub_s, mul_s, axpy_s, scale_s,
        dot_s,    sum_s, relu_s, conv2d_s, scan_s,
    };
    return k;
}

}  // namespace imseg::kern

#pragma once
// Low-level arithmetic kernels behind the tensor ops. A kernel set is a table
// of function pointers; scalar reference implementations always exist and the
// best SIMD variant (AVX2 on x86-64, NEON on aarch64) is selected at runtime.
// Every variant must agree with the scalar reference (equivalence-tested).

#include <cstddef>
#include <string>
#include <vector>

#include "imseg/tensor.hpp"

namespace imseg::kern {

// Direct convolution on an already padded input.
//   in   (n, cin, hp, wp)   row-major
//   w    (cout, cin/groups, kh, kw)
//   bias (cout) or nullptr
//   out  (n, cout, ho, wo)  with ho = (hp - kh)/sh + 1, wo = (wp - kw)/sw + 1
struct ConvDims {
    int n, cin, hp, wp;
    int cout, kh, kw;
    int ho, wo;
    int sh, sw;
    int groups;
};

// Selective-scan recurrence over one batch element.
//   u, delta (d_inner, L)        y (d_inner, L)
//   A        (d_inner, n_state)  D (d_inner)
//   bt, ct   (L, n_state)        time-major
//   h_hist   (d_inner, L, n_state) post-update states, or nullptr
// Per channel i: h_t = exp(delta[i,t] * A[i,:]) * h_{t-1} + (delta[i,t] * bt[t,:]) * u[i,t]
//                y[i,t] = dot(ct[t,:], h_t) + D[i] * u[i,t]
struct ScanDims {
    int L, d_inner, n_state;
};

struct Kernels {
    const char* name;

    void (*add)(const real* a, const real* b, real* out, std::size_t n);
    void (*sub)(const real* a, const real* b, real* out, std::size_t n);
    void (*mul)(const real* a, const real* b, real* out, std::size_t n);
    void (*axpy)(real alpha, const real* x, real* y, std::size_t n);  // y += alpha*x
    void (*scale)(real alpha, const real* x, real* y, std::size_t n); // y  = alpha*x
    real (*dot)(const real* a, const real* b, std::size_t n);
    real (*sum)(const real* a, std::size_t n);
    void (*relu)(const real* x, real* y, std::size_t n);

    void (*conv2d)(const ConvDims& d, const real* in, const real* w,
                   const real* bias, real* out);
    void (*scan)(const ScanDims& d, const real* u, const real* delta,
                 const real* A, const real* bt, const real* ct, const real* D,
                 real* y, real* h_hist);
};

const Kernels& scalar_kernels();

// Active set: chosen once at startup (best supported variant, overridable via
// the IMSEG_KERNELS environment variable), switchable from tests.
const Kernels& active();
bool set_active(const std::string& name);
std::vector<const Kernels*> available();

}  // namespace imseg::kern

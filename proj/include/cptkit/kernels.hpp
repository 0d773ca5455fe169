// Complex double-precision kernels behind all dense linear algebra.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant working on the interleaved (re, im) layout of std::complex<double>.
// The active backend is picked once at startup: AVX2 when the CPU supports
// AVX2+FMA, scalar otherwise. The CPTKIT_SIMD environment variable
// ("scalar", "avx2", "auto") or select_backend() overrides the choice.
// SIMD variants are equivalence-tested against the scalar reference.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace cptkit::kernels {

using cplx = std::complex<double>;

struct Backend {
    const char* name;
    // c = a * b, a is n x k, b is k x m, all row-major; c is overwritten.
    void (*matmul)(const cplx* a, const cplx* b, cplx* c,
                   std::size_t n, std::size_t k, std::size_t m);
    // y += alpha * x
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // sum_i conj(x_i) * y_i
    cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);
    // x *= alpha
    void (*scale)(cplx alpha, cplx* x, std::size_t n);
    // sum_i |x_i|^2
    double (*norm_sq)(const cplx* x, std::size_t n);
    // max_i |x_i - y_i| (complex modulus)
    double (*max_abs_diff)(const cplx* x, const cplx* y, std::size_t n);
};

const Backend& scalar_backend();

// Null when this build carries no AVX2 variant (non-x86 target).
const Backend* avx2_backend();

// True when the running CPU can execute the AVX2 variant.
bool avx2_supported();

// Currently active backend (initialised on first use).
const Backend& active();

// Force a backend by name: "scalar", "avx2" or "auto".
// Returns false (and leaves the selection unchanged) when unavailable.
bool select_backend(std::string_view name);

} // namespace cptkit::kernels

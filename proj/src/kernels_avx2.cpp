// AVX2+FMA kernels on the interleaved (re, im) layout of std::complex<double>.
// Two complex values per 256-bit vector. Compiled with -mavx2 -mfma; the
// dispatcher only routes here after a runtime CPU check.

#include "cptkit/kernels.hpp"

#ifdef CPTKIT_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

namespace cptkit::kernels {

namespace {

// Complex product of a broadcast scalar (are, aim) with a vector of two
// complex values b = [br0, bi0, br1, bi1]:
//   re = are*br - aim*bi,  im = are*bi + aim*br
// fmaddsub subtracts in even lanes and adds in odd lanes, which is exactly
// the (re, im) sign pattern.
inline __m256d cmul_broadcast(__m256d are, __m256d aim, __m256d b)
{
    const __m256d bswap = _mm256_permute_pd(b, 0x5); // [bi0, br0, bi1, br1]
    return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bswap));
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c,
                 std::size_t n, std::size_t k, std::size_t m)
{
    double* cd = reinterpret_cast<double*>(c);
    for (std::size_t i = 0; i < n * m; ++i)
        c[i] = cplx(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cplx aval = a[i * k + l];
            if (aval == cplx(0.0, 0.0))
                continue;
            const __m256d are = _mm256_set1_pd(aval.real());
            const __m256d aim = _mm256_set1_pd(aval.imag());
            const double* brow = reinterpret_cast<const double*>(b + l * m);
            double* crow = cd + 2 * i * m;
            std::size_t j = 0;
            for (; j + 2 <= m; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j,
                                 _mm256_add_pd(cv, cmul_broadcast(are, aim, bv)));
            }
            for (; j < m; ++j)
                c[i * m + j] += aval * b[l * m + j];
        }
    }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n)
{
    const __m256d are = _mm256_set1_pd(alpha.real());
    const __m256d aim = _mm256_set1_pd(alpha.imag());
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i,
                         _mm256_add_pd(yv, cmul_broadcast(are, aim, xv)));
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n)
{
    // conj(x)*y: re = xr*yr + xi*yi, im = xr*yi - xi*yr.
    // acc_p accumulates x (.) y pairwise, acc_q accumulates swap(x) (.) y.
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc_p = _mm256_setzero_pd();
    __m256d acc_q = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d xswap = _mm256_permute_pd(xv, 0x5);
        acc_p = _mm256_fmadd_pd(xv, yv, acc_p);
        acc_q = _mm256_fmadd_pd(xswap, yv, acc_q);
    }
    alignas(32) double p[4];
    alignas(32) double q[4];
    _mm256_store_pd(p, acc_p);
    _mm256_store_pd(q, acc_q);
    double re = p[0] + p[1] + p[2] + p[3];
    double im = (q[1] - q[0]) + (q[3] - q[2]);
    for (; i < n; ++i) {
        const cplx t = std::conj(x[i]) * y[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

void scale_avx2(cplx alpha, cplx* x, std::size_t n)
{
    const __m256d are = _mm256_set1_pd(alpha.real());
    const __m256d aim = _mm256_set1_pd(alpha.imag());
    double* xd = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul_broadcast(are, aim, xv));
    }
    for (; i < n; ++i)
        x[i] *= alpha;
}

double norm_sq_avx2(const cplx* x, std::size_t n)
{
    const double* xd = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    double total = s[0] + s[1] + s[2] + s[3];
    for (; i < n; ++i)
        total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return total;
}

double max_abs_diff_avx2(const cplx* x, const cplx* y, std::size_t n)
{
    // Track the max squared modulus of the difference, sqrt once at the end.
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * i),
                                        _mm256_loadu_pd(yd + 2 * i));
        const __m256d sq = _mm256_mul_pd(d, d);
        // re^2 + im^2 per complex value: add the swapped lane.
        const __m256d mod2 = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
        worst = _mm256_max_pd(worst, mod2);
    }
    alignas(32) double w[4];
    _mm256_store_pd(w, worst);
    double best = w[0];
    for (int lane = 1; lane < 4; ++lane)
        best = w[lane] > best ? w[lane] : best;
    best = std::sqrt(best);
    for (; i < n; ++i) {
        const double d = std::abs(x[i] - y[i]);
        if (d > best)
            best = d;
    }
    return best;
}

} // namespace

const Backend* avx2_backend()
{
    static const Backend backend{
        "avx2",
        matmul_avx2,
        axpy_avx2,
        dot_conj_avx2,
        scale_avx2,
        norm_sq_avx2,
        max_abs_diff_avx2,
    };
    return &backend;
}

} // namespace cptkit::kernels

#else // !CPTKIT_HAVE_AVX2

namespace cptkit::kernels {

const Backend* avx2_backend() { return nullptr; }

} // namespace cptkit::kernels

#endif

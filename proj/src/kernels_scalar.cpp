// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against.

#include "cptkit/kernels.hpp"

#include <cmath>

namespace cptkit::kernels {

namespace {

void matmul_scalar(const cplx* a, const cplx* b, cplx* c,
                   std::size_t n, std::size_t k, std::size_t m)
{
    for (std::size_t i = 0; i < n * m; ++i)
        c[i] = cplx(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cplx aval = a[i * k + l];
            if (aval == cplx(0.0, 0.0))
                continue;
            const cplx* brow = b + l * m;
            cplx* crow = c + i * m;
            for (std::size_t j = 0; j < m; ++j)
                crow[j] += aval * brow[j];
        }
    }
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += alpha * x[i];
}

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n)
{
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        acc += std::conj(x[i]) * y[i];
    return acc;
}

void scale_scalar(cplx alpha, cplx* x, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= alpha;
}

double norm_sq_scalar(const cplx* x, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

double max_abs_diff_scalar(const cplx* x, const cplx* y, std::size_t n)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(x[i] - y[i]);
        if (d > worst)
            worst = d;
    }
    return worst;
}

} // namespace

const Backend& scalar_backend()
{
    static const Backend backend{
        "scalar",
        matmul_scalar,
        axpy_scalar,
        dot_conj_scalar,
        scale_scalar,
        norm_sq_scalar,
        max_abs_diff_scalar,
    };
    return backend;
}

} // namespace cptkit::kernels

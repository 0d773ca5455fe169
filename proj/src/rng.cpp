#include "cptkit/rng.hpp"

namespace cptkit {

StateVector random_state(std::size_t dim, Rng& rng)
{
    StateVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = rng.gaussian_complex();
    v.normalize();
    return v;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng)
{
    ComplexMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            a(i, j) = rng.gaussian_complex();
    ComplexMatrix h = a + a.adjoint();
    h *= cplx(0.5, 0.0);
    return h;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng)
{
    // QR of a Gaussian matrix via twice-applied modified Gram-Schmidt,
    // columns phase-fixed so the diagonal of R is positive.
    ComplexMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            a(i, j) = rng.gaussian_complex();
    std::vector<std::vector<cplx>> cols(dim, std::vector<cplx>(dim));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            cols[j][i] = a(i, j);
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const cplx proj = kernels::active().dot_conj(cols[k].data(), cols[j].data(), dim);
                kernels::active().axpy(-proj, cols[k].data(), cols[j].data(), dim);
            }
        }
        const double n = std::sqrt(kernels::active().norm_sq(cols[j].data(), dim));
        kernels::active().scale(cplx(1.0 / n, 0.0), cols[j].data(), dim);
    }
    ComplexMatrix q(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            q(i, j) = cols[j][i];
    return q;
}

ComplexMatrix random_density(std::size_t dim, Rng& rng)
{
    ComplexMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            a(i, j) = rng.gaussian_complex();
    ComplexMatrix rho = a * a.adjoint();
    const double tr = rho.trace().real();
    rho *= cplx(1.0 / tr, 0.0);
    return rho;
}

} // namespace cptkit

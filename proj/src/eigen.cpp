#include "cptkit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cptkit {

namespace {

double off_diagonal_norm(const ComplexMatrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h, double hermiticity_tol)
{
    if (!h.is_square())
        throw ShapeError("eigendecomposition of non-square matrix");
    if (h.hermiticity_residual() > hermiticity_tol)
        throw ValidationError("hermitian_eigen: input is not Hermitian");

    const std::size_t n = h.rows();
    // Symmetrize to kill rounding-level asymmetry.
    ComplexMatrix a = h + h.adjoint();
    a *= cplx(0.5, 0.0);
    ComplexMatrix v = ComplexMatrix::identity(n);

    if (n > 1) {
        const double scale = std::max(a.max_abs(), 1e-300);
        const double stop = 1e-15 * scale * static_cast<double>(n);
        constexpr int max_sweeps = 64;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            if (off_diagonal_norm(a) <= stop)
                break;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = a(p, q);
                    const double b = std::abs(apq);
                    if (b <= 1e-300)
                        continue;
                    // Phase factor u with a(p,q) = b*u; diag(1, conj(u))
                    // turns the 2x2 block real symmetric, then a real
                    // rotation with angle from tau zeroes it.
                    const cplx u = apq / b;
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (app - aqq) / (2.0 * b);
                    const double sg = tau >= 0.0 ? 1.0 : -1.0;
                    const double t = sg / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    // G(p,p)=c, G(p,q)=-s, G(q,p)=conj(u)*s, G(q,q)=conj(u)*c
                    const cplx gqp = std::conj(u) * s;
                    const cplx gqq = std::conj(u) * c;
                    // Rows: A <- G^dagger A
                    for (std::size_t j = 0; j < n; ++j) {
                        const cplx rp = a(p, j);
                        const cplx rq = a(q, j);
                        a(p, j) = c * rp + u * s * rq;
                        a(q, j) = -s * rp + u * c * rq;
                    }
                    // Columns: A <- A G, V <- V G
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx cp = a(i, p);
                        const cplx cq = a(i, q);
                        a(i, p) = c * cp + gqp * cq;
                        a(i, q) = -s * cp + gqq * cq;
                        const cplx vp = v(i, p);
                        const cplx vq = v(i, q);
                        v(i, p) = c * vp + gqp * vq;
                        v(i, q) = -s * vp + gqq * vq;
                    }
                    a(p, q) = cplx(0.0, 0.0);
                    a(q, p) = cplx(0.0, 0.0);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenSystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

} // namespace cptkit

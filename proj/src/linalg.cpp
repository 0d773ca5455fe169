#include "cptkit/linalg.hpp"

#include "cptkit/eigen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace cptkit {

namespace {
std::atomic<std::size_t> g_tensor_cap{std::size_t{1} << 20};
}

std::size_t tensor_dim_cap() { return g_tensor_cap.load(); }
void set_tensor_dim_cap(std::size_t cap) { g_tensor_cap.store(cap); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > tensor_dim_cap() || cols > tensor_dim_cap())
        throw CapacityError("tensor product exceeds the configured dimension cap");
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx f = a(i, j);
            if (f == cplx(0.0, 0.0))
                continue;
            for (std::size_t r = 0; r < b.rows(); ++r) {
                cplx* dst = out.data() + (i * b.rows() + r) * cols + j * b.cols();
                kernels::active().axpy(f, b.data() + r * b.cols(), dst, b.cols());
            }
        }
    }
    return out;
}

StateVector tensor(const StateVector& a, const StateVector& b)
{
    const std::size_t dim = a.dim() * b.dim();
    if (dim > tensor_dim_cap())
        throw CapacityError("tensor product exceeds the configured dimension cap");
    StateVector out(dim);
    for (std::size_t i = 0; i < a.dim(); ++i)
        kernels::active().axpy(a[i], b.data(), out.data() + i * b.dim(), b.dim());
    return out;
}

StateVector tensor_power(const StateVector& a, std::size_t n)
{
    if (n == 0)
        return StateVector(std::vector<cplx>{cplx(1.0, 0.0)});
    StateVector out = a;
    for (std::size_t i = 1; i < n; ++i)
        out = tensor(out, a);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& site_dims,
                            const std::vector<std::size_t>& keep)
{
    std::size_t total = 1;
    for (std::size_t d : site_dims)
        total *= d;
    if (!rho.is_square() || rho.rows() != total)
        throw ShapeError("partial_trace: site dimensions do not factor the matrix");
    for (std::size_t k : keep)
        if (k >= site_dims.size())
            throw ShapeError("partial_trace: keep index out of range");

    std::vector<bool> kept(site_dims.size(), false);
    for (std::size_t k : keep)
        kept[k] = true;

    // Row-major strides; site 0 is the slowest (leftmost tensor factor).
    std::vector<std::size_t> stride(site_dims.size(), 1);
    for (std::size_t i = site_dims.size(); i-- > 1;)
        stride[i - 1] = stride[i] * site_dims[i];

    // Flat offsets of every kept and every traced multi-index.
    std::vector<std::size_t> kept_offsets{0};
    std::vector<std::size_t> traced_offsets{0};
    for (std::size_t site = 0; site < site_dims.size(); ++site) {
        auto& target = kept[site] ? kept_offsets : traced_offsets;
        std::vector<std::size_t> expanded;
        expanded.reserve(target.size() * site_dims[site]);
        for (std::size_t base : target)
            for (std::size_t x = 0; x < site_dims[site]; ++x)
                expanded.push_back(base + x * stride[site]);
        target = std::move(expanded);
    }

    const std::size_t out_dim = kept_offsets.size();
    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t a = 0; a < out_dim; ++a)
        for (std::size_t b = 0; b < out_dim; ++b) {
            cplx sum(0.0, 0.0);
            for (std::size_t t : traced_offsets)
                sum += rho(kept_offsets[a] + t, kept_offsets[b] + t);
            out(a, b) = sum;
        }
    return out;
}

double von_neumann_entropy(const ComplexMatrix& rho)
{
    if (!rho.is_density())
        throw ValidationError("von_neumann_entropy: input is not a density matrix");
    const auto eig = hermitian_eigen(rho);
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < tol::eigen_clamp)
            continue;
        s -= lambda * std::log2(lambda);
    }
    return std::max(0.0, s); // clamp rounding below the pure-state floor
}

ComplexMatrix evolution_operator(const ComplexMatrix& h, double t)
{
    if (h.hermiticity_residual() > tol::algebra)
        throw ValidationError("evolve: Hamiltonian is not Hermitian");
    if (t == 0.0)
        return ComplexMatrix::identity(h.rows());
    const auto eig = hermitian_eigen(h);
    const std::size_t n = h.rows();
    // V e^{-i lambda t}: scale column k by the phase, then close with V^dagger.
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx phase = std::exp(cplx(0.0, -eig.eigenvalues[k] * t));
        for (std::size_t i = 0; i < n; ++i)
            scaled(i, k) *= phase;
    }
    return scaled * eig.eigenvectors.adjoint();
}

ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& h, double t)
{
    if (rho.rows() != h.rows() || !rho.is_square() || !h.is_square())
        throw ShapeError("evolve: dimension mismatch");
    if (rho.hermiticity_residual() > tol::algebra ||
        std::abs(rho.trace() - cplx(1.0, 0.0)) > tol::algebra)
        throw ValidationError("evolve: rho is not a density matrix");
    if (t == 0.0)
        return rho;
    const ComplexMatrix u = evolution_operator(h, t);
    return u * rho * u.adjoint();
}

} // namespace cptkit

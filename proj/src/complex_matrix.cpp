#include "cptkit/complex_matrix.hpp"

#include "cptkit/eigen.hpp"

#include <cmath>

namespace cptkit {

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw ShapeError("ragged row in matrix literal");
        std::size_t j = 0;
        for (const cplx& v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d)
{
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const
{
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = std::conj(entries_[i]);
    return out;
}

cplx ComplexMatrix::trace() const
{
    if (!is_square())
        throw ShapeError("trace of non-square matrix");
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const
{
    double worst = 0.0;
    for (const cplx& v : entries_)
        worst = std::max(worst, std::abs(v));
    return worst;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw ShapeError("matmul dimension mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    kernels::active().matmul(data(), rhs.data(), out.data(), rows_, cols_, rhs.cols_);
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeError("matrix add dimension mismatch");
    ComplexMatrix out = *this;
    kernels::active().axpy(cplx(1.0, 0.0), rhs.data(), out.data(), out.size());
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeError("matrix sub dimension mismatch");
    ComplexMatrix out = *this;
    kernels::active().axpy(cplx(-1.0, 0.0), rhs.data(), out.data(), out.size());
    return out;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar)
{
    kernels::active().scale(scalar, data(), size());
    return *this;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const
{
    if (v.size() != cols_)
        throw ShapeError("matvec dimension mismatch");
    std::vector<cplx> out(rows_, cplx(0.0, 0.0));
    kernels::active().matmul(data(), v.data(), out.data(), rows_, cols_, 1);
    return out;
}

double ComplexMatrix::unitarity_residual() const
{
    if (!is_square())
        throw ShapeError("unitarity of non-square matrix");
    return max_abs_diff(adjoint() * (*this), identity(rows_));
}

double ComplexMatrix::hermiticity_residual() const
{
    if (!is_square())
        throw ShapeError("hermiticity of non-square matrix");
    return max_abs_diff(*this, adjoint());
}

bool ComplexMatrix::is_hermitian(double tolerance) const
{
    return hermiticity_residual() <= tolerance;
}

bool ComplexMatrix::is_unitary(double tolerance) const
{
    return unitarity_residual() <= tolerance;
}

bool ComplexMatrix::is_identity(double tolerance) const
{
    return is_square() && max_abs_diff(*this, identity(rows_)) <= tolerance;
}

bool ComplexMatrix::is_density(double algebra_tol, double eigen_tol) const
{
    if (!is_square() || !is_hermitian(algebra_tol))
        return false;
    if (std::abs(trace() - cplx(1.0, 0.0)) > algebra_tol)
        return false;
    const auto eig = hermitian_eigen(*this);
    return eig.eigenvalues.front() >= -eigen_tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("max_abs_diff dimension mismatch");
    return kernels::active().max_abs_diff(a.data(), b.data(), a.size());
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index)
{
    StateVector v(dim);
    v[index] = cplx(1.0, 0.0);
    return v;
}

double StateVector::norm() const
{
    return std::sqrt(kernels::active().norm_sq(data(), dim()));
}

void StateVector::normalize()
{
    const double n = norm();
    if (n == 0.0)
        throw ValidationError("cannot normalize the zero vector");
    kernels::active().scale(cplx(1.0 / n, 0.0), data(), dim());
}

ComplexMatrix StateVector::projector() const
{
    ComplexMatrix p(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            p(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    return p;
}

cplx inner(const StateVector& a, const StateVector& b)
{
    if (a.dim() != b.dim())
        throw ShapeError("inner product dimension mismatch");
    return kernels::active().dot_conj(a.data(), b.data(), a.dim());
}

StateVector apply(const ComplexMatrix& m, const StateVector& v)
{
    return StateVector(m.apply(v.amplitudes()));
}

double max_abs_diff(const StateVector& a, const StateVector& b)
{
    if (a.dim() != b.dim())
        throw ShapeError("max_abs_diff dimension mismatch");
    return kernels::active().max_abs_diff(a.data(), b.data(), a.dim());
}

} // namespace cptkit

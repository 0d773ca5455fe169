// Dense complex matrices and state vectors over an ordered basis.
//
// Global index convention: row-major storage, and for tensor products the
// LEFT factor varies SLOWEST. Every basis ordering in the toolkit is
// documented against this convention.

#pragma once

#include "cptkit/errors.hpp"
#include "cptkit/kernels.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cptkit {

using cplx = std::complex<double>;

namespace tol {
// Default tolerance for algebraic identities (unitarity, Hermiticity, ...).
inline constexpr double algebra = 1e-12;
// Default tolerance for spectral quantities (eigensolve-derived).
inline constexpr double spectral = 1e-10;
// Eigenvalues below this are clamped to zero before entropy evaluation.
inline constexpr double eigen_clamp = 1e-14;
} // namespace tol

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw ShapeError("entry count does not match rows*cols");
    }

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    // Row-wise construction for small literals in tests and fixtures.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }
    const std::vector<cplx>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;
    double max_abs() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator*=(cplx scalar);
    friend ComplexMatrix operator*(cplx scalar, ComplexMatrix m)
    {
        m *= scalar;
        return m;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

    bool is_hermitian(double tolerance = tol::algebra) const;
    bool is_unitary(double tolerance = tol::algebra) const;
    bool is_identity(double tolerance = tol::algebra) const;
    // Hermitian within `algebra_tol`, trace 1 within `algebra_tol`,
    // min eigenvalue >= -`eigen_tol`.
    bool is_density(double algebra_tol = tol::algebra,
                    double eigen_tol = 1e-10) const;

    double unitarity_residual() const;
    double hermiticity_residual() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Pure-state amplitude sequence over an ordered basis. The basis labels live
// with the space that produced the vector (see spin_spaces).
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : amplitudes_(dim, cplx(0.0, 0.0)) {}
    explicit StateVector(std::vector<cplx> amps) : amplitudes_(std::move(amps)) {}

    static StateVector basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    cplx& operator[](std::size_t i) { return amplitudes_[i]; }
    const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }
    cplx* data() { return amplitudes_.data(); }
    const cplx* data() const { return amplitudes_.data(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }

    double norm() const;
    void normalize();

    // |v><v| over the same basis.
    ComplexMatrix projector() const;

private:
    std::vector<cplx> amplitudes_;
};

cplx inner(const StateVector& a, const StateVector& b);
StateVector apply(const ComplexMatrix& m, const StateVector& v);
double max_abs_diff(const StateVector& a, const StateVector& b);

} // namespace cptkit

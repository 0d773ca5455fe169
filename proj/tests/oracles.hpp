// Test-only reference implementations, kept independent of the library code
// paths they check.

#pragma once

#include "cptkit/complex_matrix.hpp"

#include <cmath>
#include <vector>

namespace cptkit::testing {

// Plain quadruple-loop Kronecker product.
inline ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    return out;
}

// Plain triple-loop matrix product.
inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx sum(0.0, 0.0);
            for (std::size_t k = 0; k < a.cols(); ++k)
                sum += a(i, k) * b(k, j);
            out(i, j) = sum;
        }
    return out;
}

// Single-site reduced state of an n-qubit density matrix, keeping site
// `site` (site 0 is the slowest index), by direct bitstring enumeration.
inline ComplexMatrix naive_single_site_reduction(const ComplexMatrix& rho,
                                                 unsigned n, unsigned site)
{
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t bit = std::size_t{1} << (n - 1 - site);
    ComplexMatrix out(2, 2);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~bit) != (col & ~bit))
                continue; // traced-out bits must agree
            const std::size_t a = (row & bit) ? 1 : 0;
            const std::size_t b = (col & bit) ? 1 : 0;
            out(a, b) += rho(row, col);
        }
    }
    return out;
}

// exp(-i t (x*sx + y*sy + z*sz)) in closed form.
inline ComplexMatrix exp_pauli(double x, double y, double z, double t)
{
    const double r = std::sqrt(x * x + y * y + z * z);
    const double c = std::cos(r * t);
    const double s = r == 0.0 ? 0.0 : std::sin(r * t) / r;
    const cplx i(0.0, 1.0);
    return ComplexMatrix::from_rows(
        {{c - i * s * z, -i * s * x - s * y}, {-i * s * x + s * y, c + i * s * z}});
}

// Swap operator for qubit sites a < b on n qubits (site 0 slowest).
inline ComplexMatrix swap_sites(unsigned n, unsigned a, unsigned b)
{
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t bit_a = std::size_t{1} << (n - 1 - a);
    const std::size_t bit_b = std::size_t{1} << (n - 1 - b);
    ComplexMatrix out(dim, dim);
    for (std::size_t x = 0; x < dim; ++x) {
        std::size_t y = x;
        const bool va = x & bit_a;
        const bool vb = x & bit_b;
        if (va != vb)
            y = (x ^ bit_a) ^ bit_b;
        out(y, x) = cplx(1.0, 0.0);
    }
    return out;
}

inline ComplexMatrix pauli_x()
{
    return ComplexMatrix::from_rows({{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}});
}

inline ComplexMatrix pauli_y()
{
    return ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}});
}

inline ComplexMatrix pauli_z()
{
    return ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(-1, 0)}});
}

} // namespace cptkit::testing

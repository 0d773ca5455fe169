// Eigendecomposition of Hermitian matrices (cyclic complex Jacobi).

#pragma once

#include "cptkit/complex_matrix.hpp"

#include <vector>

namespace cptkit {

struct EigenSystem {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // columns, orthonormal, same order
};

// Diagonalizes a Hermitian matrix. The input is symmetrized as (H + H†)/2
// before iteration; ValidationError when the Hermiticity residual exceeds
// `hermiticity_tol`.
EigenSystem hermitian_eigen(const ComplexMatrix& h,
                            double hermiticity_tol = tol::algebra);

} // namespace cptkit

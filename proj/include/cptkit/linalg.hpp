// Shared dense-algebra operations: Kronecker products, partial traces,
// entropies and Hamiltonian evolution.

#pragma once

#include "cptkit/complex_matrix.hpp"

#include <cstddef>
#include <vector>

namespace cptkit {

// Total-dimension cap for tensor products (default 2^20, CLI-overridable
// through CPTKIT_CAP).
std::size_t tensor_dim_cap();
void set_tensor_dim_cap(std::size_t cap);

// Kronecker product, row-major, left factor varies slowest.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor_power(const StateVector& a, std::size_t n);

// Partial trace of a density matrix over a tensor-product space with the
// given per-site dimensions, keeping the listed sites (ascending site index
// order in the output).
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& site_dims,
                            const std::vector<std::size_t>& keep);

// -sum lambda log2 lambda, eigenvalues below tol::eigen_clamp clamped to 0.
// ValidationError when rho is not a density matrix.
double von_neumann_entropy(const ComplexMatrix& rho);

// exp(-iHt) rho exp(+iHt) via eigendecomposition of H. t == 0 returns rho
// unchanged. ValidationError on non-Hermitian H.
ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& h, double t);

// exp(-iHt) as a matrix (same eigendecomposition route).
ComplexMatrix evolution_operator(const ComplexMatrix& h, double t);

} // namespace cptkit

// Text interchange formats: matrices {rows, cols, entries: [[re, im], ...]}
// (row-major), SpinSpace manifests, and momentum-grid test functions.

#pragma once

#include "cptkit/complex_matrix.hpp"
#include "cptkit/momentum_grid.hpp"
#include "cptkit/spin_spaces.hpp"

#include <string>

namespace cptkit {

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

// s, massive flag and the ordered labels; embedded amplitudes included when
// `with_embedding` and the space fits the explicit cap.
std::string space_to_json(const SpinSpace& space, bool with_embedding = false);

// {grid: {n, p_max}, values: [[u_sign, spin_z2, grid_index, re, im], ...]}
std::string testfunction_to_json(const TestFunction& phi);

// {entries: [[u_sign, spin_z2, p_sign, theta_c, theta_pt], ...]}
std::string phases_to_json(const PhaseConvention& phases);
PhaseConvention phases_from_json(const std::string& text);

} // namespace cptkit

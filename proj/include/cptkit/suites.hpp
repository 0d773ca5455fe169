// Runnable verification suites. The CLI `verify` command and the acceptance
// binary both drive these; all randomness derives from the given seed.

#pragma once

#include "cptkit/report.hpp"
#include "cptkit/resource_theory.hpp"
#include "cptkit/rng.hpp"

#include <cstdint>

namespace cptkit {

// Random Hamiltonian commuting with CPT: independent Hermitian blocks inside
// the two sectors, H = P+ A+ P+ + P- A- P-.
ComplexMatrix sector_block_hamiltonian(const ComplexMatrix& cpt, Rng& rng);

// Random G-invariant density: the twirl of a random density under {1, CPT}.
ComplexMatrix invariant_density(const ComplexMatrix& cpt, Rng& rng);

Report suite_klein(int two_s, bool massive, bool random_phases, std::uint64_t seed,
                   double tolerance = tol::algebra);

Report suite_lemma1(int two_s);

Report suite_unitary_consistency(int two_s, bool massive, unsigned samples,
                                 std::uint64_t seed,
                                 double tolerance = tol::spectral);

Report suite_antiunitary_demo(double t = 0.78539816339744830962);

Report suite_momentum(int two_s, bool massive, std::size_t n_points, double p_max,
                      unsigned packets, bool random_phases, std::uint64_t seed,
                      double tolerance = tol::algebra);

enum class DfsNoise { Twirl, Dephase, Depolarize };

Report suite_dfs(int two_s, bool massive, int sector_sign, DfsNoise noise,
                 double noise_p, unsigned trials, std::uint64_t seed,
                 double tolerance = tol::algebra);

} // namespace cptkit

// Encoding quantum information in CPT-degenerate eigensectors: the sector
// acts as a decoherence-free subspace, so messages survive every CPT-
// covariant channel without a shared matter-antimatter frame.

#pragma once

#include "cptkit/cpt_operators.hpp"
#include "cptkit/report.hpp"
#include "cptkit/resource_theory.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cptkit {

struct DfsCode {
    int sector_sign = +1;
    std::vector<StateVector> codewords; // orthonormal sector eigenbasis
    std::size_t logical_dim = 0;
    double capacity_bits = 0.0; // log2(logical_dim), reported unrounded
};

// Codewords are the CPT eigensector basis. StructureError on an empty sector.
DfsCode build_code(const SpinSpace& space, const ComplexMatrix& cpt, int sector_sign);

// sum_j alpha_j |sector, j>. ValidationError on wrong length or non-unit
// message.
StateVector encode(std::span<const cplx> message, const DfsCode& code);

struct DecodeResult {
    std::vector<cplx> message; // <codeword_j | state>
    double residual = 0.0;     // norm of the component outside the code space
};

DecodeResult decode(const StateVector& state, const DfsCode& code);

// Random phase flip between the sectors: rho -> (rho + W rho W)/2 with
// W = P+ - P-. For Z2 this coincides with the CPT twirl.
QuantumChannel sector_dephasing_channel(const ComplexMatrix& cpt);

// Depolarizing noise acting inside the code sector (identity outside),
// via generalized shift/clock operators on the codeword basis. Covariant
// because CPT acts as a constant sign on each sector.
QuantumChannel code_space_depolarizing(const DfsCode& code, double p,
                                       std::size_t total_dim);

// Decode-fidelity statistics for encoded messages under covariant noise.
// PreconditionError when the channel is not G-covariant for {1, CPT}.
Report covariant_noise_trial(const DfsCode& code, const ComplexMatrix& cpt,
                             std::span<const cplx> message,
                             const QuantumChannel& noise, unsigned trials,
                             std::uint64_t seed);

} // namespace cptkit

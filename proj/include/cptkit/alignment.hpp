// Alice/Bob matter-antimatter frame alignment: N-copy discrimination of
// |psi> vs CPT|psi>, Monte-Carlo simulation against the Helstrom closed form,
// and the sweep connecting operational error to the alignment rate.

#pragma once

#include "cptkit/report.hpp"
#include "cptkit/resource_theory.hpp"

#include <cstdint>
#include <vector>

namespace cptkit {

// <psi|CPT|psi>; equals q0 - q1 for real-amplitude standard-form states.
cplx overlap(const StateVector& psi, const ComplexMatrix& cpt);

// Minimum discrimination error for |psi>^(x)N vs (CPT|psi>)^(x)N with equal
// priors: (1 - sqrt(1 - overlap^{2N}))/2.
double helstrom_error(double overlap_mag, unsigned copies);

struct AlignmentExperiment {
    StateVector psi;
    unsigned copies = 1;
    unsigned trials = 10000;
    std::uint64_t seed = 0;
};

enum class SimMode { Auto, Explicit, ClosedForm };

// Monte-Carlo simulation of the optimal two-outcome measurement with a
// uniformly random true frame relation. Explicit mode materializes the
// N-copy vectors (CapacityError when dim^N exceeds the tensor cap and
// Explicit was forced); Auto falls back to the closed-form overlap.
Report run_experiment(const AlignmentExperiment& experiment, const ComplexMatrix& cpt,
                      SimMode mode = SimMode::Auto);

// sqrt(q0)|+> + sqrt(1-q0)|-> over the 2-dim anti-diagonal CPT.
StateVector standard_state(double q0);
ComplexMatrix anti_diagonal_ones(std::size_t dim);

struct SweepRow {
    double q0 = 0.0;
    unsigned copies = 1;
    AlignmentRate rate;
    double closed_form_error = 0.0;
    double empirical_error = 0.0;
    double stderr_ = 0.0;
};

std::vector<SweepRow> alignment_sweep(const std::vector<double>& q0_grid,
                                      const std::vector<unsigned>& n_grid,
                                      unsigned trials, std::uint64_t seed);

std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace cptkit

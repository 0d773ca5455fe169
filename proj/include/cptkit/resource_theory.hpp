// Resource-theoretic machinery: invariance and covariance predicates,
// twirling, the unitary-representation consistency check, the anti-unitary
// inconsistency demonstration, and the frameness measures.

#pragma once

#include "cptkit/complex_matrix.hpp"
#include "cptkit/cpt_operators.hpp"
#include "cptkit/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cptkit {

// One represented group element. Anti-unitary elements are stored as a
// unitary core followed by complex conjugation in the declared basis, i.e.
// T rho T^{-1} = U conj(rho) U^dagger; the basis in which conjugation acts
// is recorded so every statement about them stays basis-explicit.
struct GroupElement {
    std::string label;
    ComplexMatrix op;
    bool antiunitary = false;
};

struct GroupRep {
    std::vector<GroupElement> elements;
    std::string conjugation_basis = "canonical";

    bool has_antiunitary() const;

    // {1, CPT} as a unitary Z2 representation.
    static GroupRep z2_cpt(const ComplexMatrix& cpt);
    // {1, C, PT, CPT} over a SpinSpace.
    static GroupRep klein(const SpinSpace& space, const PhaseConvention& phases);
    // {1, T} with T = (unitary core) followed by conjugation: anti-unitary.
    static GroupRep z2_antiunitary(const ComplexMatrix& unitary_core,
                                   std::string basis_name = "canonical");
};

// T(g) rho T(g)^{-1} for either kind of element.
ComplexMatrix conjugate_by(const GroupElement& g, const ComplexMatrix& rho);

struct InvarianceResult {
    bool holds = false;
    double residual = 0.0;
};

// max over g of |T(g) rho T(g)^{-1} - rho|_maxabs against tol.
InvarianceResult is_g_invariant(const ComplexMatrix& rho, const GroupRep& rep,
                                double tolerance = tol::algebra);

class QuantumChannel {
public:
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    std::size_t dim() const;
    ComplexMatrix apply(const ComplexMatrix& rho) const;
    double trace_preservation_residual() const; // |sum K^dag K - I|_maxabs

    static QuantumChannel identity(std::size_t dim);
    // rho -> (rho + CPT rho CPT^dagger)/2
    static QuantumChannel cpt_twirl(const ComplexMatrix& cpt);

private:
    std::vector<ComplexMatrix> kraus_;
};

// Covariance checked over a spanning set of densities (matrix units
// symmetrized to densities); complete because channels are linear.
InvarianceResult is_g_covariant(const QuantumChannel& channel, const GroupRep& rep,
                                double tolerance = tol::spectral);

// Uniform group average (1/|G|) sum_g T(g) rho T(g)^dagger.
// UnsupportedError when the rep contains an anti-unitary element.
ComplexMatrix twirl(const ComplexMatrix& rho, const GroupRep& rep);

// Evolves a G-invariant state under a commuting Hamiltonian and verifies
// invariance at every sample time (Hamiltonians commuting with a unitary
// representation can never create a resource).
Report unitary_consistency_check(const ComplexMatrix& rho0, const ComplexMatrix& h,
                                 const std::vector<double>& t_samples,
                                 const GroupRep& rep,
                                 double tolerance = tol::spectral);

// The anti-unitary counterexample: an invariant, non-stationary initial
// state evolves out of the invariant set. Runs the pure-state and
// mixed-state variants and reports the invariance residuals at t and at 0.
// DegenerateDemoError when psi0 is an H eigenstate.
Report antiunitary_inconsistency_demo(const GroupRep& rep, const ComplexMatrix& h,
                                      const StateVector& psi0, double t);

// tau = 1 - |sum_k psi_k^2|, evaluated after the optional basis change
// (coefficients B^dagger psi). Basis dependent by construction.
double tau_measure(const StateVector& psi,
                   const std::optional<ComplexMatrix>& basis_change = std::nullopt);

// R = -2 log2 |q0 - q1|, with a tagged infinity for q0 = q1.
struct AlignmentRate {
    bool infinite = false;
    double bits = 0.0;
};
AlignmentRate alignment_rate(double q0);
std::string to_string(const AlignmentRate& r);

struct StandardFormResult {
    double q0 = 0.0;
    double q1 = 0.0;
    StateVector plus_part;
    StateVector minus_part;
    bool plus_present = false;
    bool minus_present = false;
};

// Splits psi into its CPT sector components: q0 = |P+ psi|^2, q1 = |P- psi|^2,
// parts normalized (flagged absent when a projection vanishes).
StandardFormResult standard_form(const StateVector& psi, const ComplexMatrix& cpt);

} // namespace cptkit

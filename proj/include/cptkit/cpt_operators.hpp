// C, PT and CPT as phase-decorated permutation matrices over a SpinSpace;
// Klein four-group verification; CPT eigensector extraction.

#pragma once

#include "cptkit/report.hpp"
#include "cptkit/rng.hpp"
#include "cptkit/spin_spaces.hpp"

#include <map>
#include <tuple>

namespace cptkit {

enum class SymmetryOp { C, PT, CPT };

// Label image under the sign flips: C flips u; PT flips spin and momentum;
// CPT flips all three.
BasisLabel flipped(const BasisLabel& label, SymmetryOp op);

// theta^C and theta^PT angles per (u-sign, 2*spin_z, p-sign). Admissible
// conventions satisfy theta^CPT(u,s,p) = theta^CPT(-u,-s,-p) where
// theta^CPT = theta^C + theta^PT mod 2pi. Unset labels default to zero.
class PhaseConvention {
public:
    static PhaseConvention zero() { return {}; }

    // Random admissible convention: theta^C free on every label, theta^PT
    // free on one label per CPT-flip orbit with the partner fixed by the
    // theta^CPT constraint.
    static PhaseConvention random_admissible(const SpinSpace& space, Rng& rng);

    void set(const BasisLabel& label, double theta_c, double theta_pt);
    double theta_c(const BasisLabel& label) const;
    double theta_pt(const BasisLabel& label) const;
    double theta_cpt(const BasisLabel& label) const;
    double theta(const BasisLabel& label, SymmetryOp op) const;

    // (u_sign, spin_z2, p_sign, theta_c, theta_pt) rows in key order.
    std::vector<std::tuple<int, int, int, double, double>> entries() const;

    // max circular distance between theta^CPT(l) and theta^CPT(flip(l)).
    double admissibility_residual(const SpinSpace& space) const;

private:
    using Key = std::tuple<int, int, int>;
    static Key key(const BasisLabel& l) { return {l.u_sign, l.spin_z2, l.p_sign}; }
    std::map<Key, std::pair<double, double>> table_;
};

// Operator matrix over the space's canonical basis. ClosureError (naming the
// label) when a flip image is missing from the space.
ComplexMatrix build_symmetry(const SpinSpace& space, const PhaseConvention& phases,
                             SymmetryOp op);
inline ComplexMatrix build_C(const SpinSpace& s, const PhaseConvention& p)
{
    return build_symmetry(s, p, SymmetryOp::C);
}
inline ComplexMatrix build_PT(const SpinSpace& s, const PhaseConvention& p)
{
    return build_symmetry(s, p, SymmetryOp::PT);
}
inline ComplexMatrix build_CPT(const SpinSpace& s, const PhaseConvention& p)
{
    return build_symmetry(s, p, SymmetryOp::CPT);
}

// Verifies {1, C, PT, CPT}: unitarity, every pairwise product equal to the
// group-law image up to a recorded global phase, and the {1, CPT}
// restriction as a projective Z2 representation.
Report klein_group_report(const SpinSpace& space, const PhaseConvention& phases);

// phi with CPT^2 = e^{i phi} I. StructureError when CPT^2 is not
// proportional to the identity.
double cpt_square_phase(const ComplexMatrix& cpt, double structure_tol = 1e-10);

struct CptSectorDecomposition {
    std::vector<StateVector> plus_basis;
    std::vector<StateVector> minus_basis;
};

// Orthonormal +-1 eigenbases of e^{-i phi/2} CPT (the half-phase is removed
// first so the eigenvalues are exactly +-1).
CptSectorDecomposition cpt_eigensectors(const ComplexMatrix& cpt);

// (I +- e^{-i phi/2} CPT)/2
ComplexMatrix sector_projector(const ComplexMatrix& cpt, int sign);

} // namespace cptkit

// C/PT/CPT construction, Klein group law with a symbolic phase oracle, and
// eigensector extraction.

#include "cptkit/alignment.hpp"
#include "cptkit/cpt_operators.hpp"

#include <doctest.h>

#include <cmath>

using namespace cptkit;

namespace {

const cplx one(1.0, 0.0);

// Symbolic phase oracle: composes two phase-decorated label permutations
// without any matrix arithmetic and reports whether the product differs from
// the expected operator by one global phase.
struct SymbolicOp {
    SymmetryOp op;
};

double product_phase_spread(const SpinSpace& space, const PhaseConvention& phases,
                            SymmetryOp first_applied, SymmetryOp second_applied,
                            SymmetryOp expected)
{
    // (second * first)|l> picks up theta_first(l) + theta_second(first(l));
    // the expected operator contributes theta_expected(l). The product is a
    // global phase times the expected operator iff the per-label difference
    // is constant.
    double reference = 0.0;
    bool have_reference = false;
    double spread = 0.0;
    for (const BasisLabel& l : space.basis) {
        const double composed = phases.theta(l, first_applied) +
                                phases.theta(flipped(l, first_applied), second_applied);
        double diff = std::fmod(composed - phases.theta(l, expected),
                                6.283185307179586476925286766559);
        if (diff < 0.0)
            diff += 6.283185307179586476925286766559;
        if (!have_reference) {
            reference = diff;
            have_reference = true;
        } else {
            double d = std::abs(diff - reference);
            d = std::min(d, 6.283185307179586476925286766559 - d);
            spread = std::max(spread, d);
        }
    }
    return spread;
}

} // namespace

TEST_CASE("zero-phase CPT is the anti-diagonal ones matrix")
{
    // Massive s = 1: the 12x12 case.
    const SpinSpace s1 = massive_spin_s_space(2);
    const ComplexMatrix cpt12 = build_CPT(s1, PhaseConvention::zero());
    CHECK(cpt12.rows() == 12);
    CHECK(max_abs_diff(cpt12, anti_diagonal_ones(12)) == 0.0);

    // Massless: 8x8 for any spin.
    for (int two_s : {1, 2, 3, 7}) {
        const SpinSpace ml = massless_allowed_states(two_s);
        CHECK(max_abs_diff(build_CPT(ml, PhaseConvention::zero()),
                           anti_diagonal_ones(8)) == 0.0);
    }
}

TEST_CASE("zero-phase CPT is an exact involution")
{
    const SpinSpace space = massive_spin_s_space(3);
    const ComplexMatrix cpt = build_CPT(space, PhaseConvention::zero());
    CHECK(max_abs_diff(cpt * cpt, ComplexMatrix::identity(space.dim())) == 0.0);
}

TEST_CASE("C and PT act by the advertised sign flips")
{
    const SpinSpace space = massive_primitive_basis();
    const ComplexMatrix c = build_C(space, PhaseConvention::zero());
    const ComplexMatrix pt = build_PT(space, PhaseConvention::zero());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        const BasisLabel& l = space.basis[j];
        const auto ci = space.index_of(BasisLabel{-l.u_sign, l.spin_z2, l.p_sign,
                                                  l.massive, l.u_mag});
        const auto pti = space.index_of(BasisLabel{l.u_sign, -l.spin_z2, -l.p_sign,
                                                   l.massive, l.u_mag});
        REQUIRE(ci.has_value());
        REQUIRE(pti.has_value());
        CHECK(c(*ci, j) == one);
        CHECK(pt(*pti, j) == one);
    }
}

TEST_CASE("missing image labels raise a closure error naming the label")
{
    SpinSpace broken = massive_primitive_basis();
    broken.basis.pop_back(); // drop (-u, -1/2, -p)
    try {
        (void)build_CPT(broken, PhaseConvention::zero());
        FAIL("expected ClosureError");
    } catch (const ClosureError& e) {
        CHECK(std::string(e.what()).find("-u") != std::string::npos);
    }
}

TEST_CASE("klein group law with zero phases: everything exact")
{
    const Report r = klein_group_report(massive_primitive_basis(),
                                        PhaseConvention::zero());
    CHECK(r.all_pass());
    for (const auto& c : r.checks)
        if (c.name.find("up to phase") != std::string::npos)
            CHECK(c.notes.find("phase = 0.000000") != std::string::npos);
}

TEST_CASE("klein group law holds for random admissible conventions")
{
    for (int seed = 0; seed < 5; ++seed) {
        for (bool massive : {true, false}) {
            const SpinSpace space =
                massive ? massive_spin_s_space(2) : massless_allowed_states(3);
            Rng rng(derive_seed(404, static_cast<std::uint64_t>(seed * 2 + massive)));
            const PhaseConvention phases =
                PhaseConvention::random_admissible(space, rng);

            // The theta^CPT flip-symmetry constraint.
            CHECK(phases.admissibility_residual(space) < 1e-12);

            // Symbolic oracle: every composition of two distinct non-identity
            // elements collapses to a global phase times the third element.
            using enum SymmetryOp;
            auto third = [](SymmetryOp x, SymmetryOp y) {
                const int sum = static_cast<int>(x) + static_cast<int>(y);
                const int missing = static_cast<int>(C) + static_cast<int>(PT) +
                                    static_cast<int>(CPT) - sum;
                return static_cast<SymmetryOp>(missing);
            };
            for (SymmetryOp x : {C, PT, CPT})
                for (SymmetryOp y : {C, PT, CPT}) {
                    if (x == y)
                        continue;
                    CHECK(product_phase_spread(space, phases, y, x, third(x, y)) <
                          1e-12);
                }

            // Full numeric report.
            const Report r = klein_group_report(space, phases);
            CHECK(r.all_pass());
        }
    }
}

TEST_CASE("C and PT commute up to a global phase")
{
    const SpinSpace space = massive_spin_s_space(1);
    Rng rng(7);
    const PhaseConvention phases = PhaseConvention::random_admissible(space, rng);
    const ComplexMatrix c = build_C(space, phases);
    const ComplexMatrix pt = build_PT(space, phases);
    const ComplexMatrix cp = c * pt;
    const ComplexMatrix pc = pt * c;
    // Find the relative phase from the largest entry, then compare.
    cplx ratio(0.0, 0.0);
    for (std::size_t i = 0; i < cp.size(); ++i)
        if (std::abs(cp.data()[i]) > 0.5) {
            ratio = pc.data()[i] / cp.data()[i];
            break;
        }
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    CHECK(max_abs_diff(ratio * cp, pc) < 1e-12);
}

TEST_CASE("cpt_square_phase rejects non-projective operators")
{
    CHECK(cpt_square_phase(anti_diagonal_ones(4)) == 0.0);
    const ComplexMatrix bad =
        ComplexMatrix::diagonal({cplx(1, 0), cplx(0, 1)}); // squares to diag(1,-1)
    CHECK_THROWS_AS((void)cpt_square_phase(bad), StructureError);
}

TEST_CASE("eigensectors of the anti-diagonal: explicit pair structure")
{
    // d = 2: the sigma_x eigenvectors.
    const auto two = cpt_eigensectors(anti_diagonal_ones(2));
    REQUIRE(two.plus_basis.size() == 1);
    REQUIRE(two.minus_basis.size() == 1);
    constexpr double r = 0.70710678118654752440;
    CHECK(std::abs(two.plus_basis[0][0] - cplx(r, 0)) < 1e-15);
    CHECK(std::abs(two.plus_basis[0][1] - cplx(r, 0)) < 1e-15);
    CHECK(std::abs(two.minus_basis[0][1] + cplx(r, 0)) < 1e-15);

    // Massive s = 1: sectors of dimension 6 and 6, vectors (e_j +- e_{13-j})/sqrt2.
    const SpinSpace s1 = massive_spin_s_space(2);
    const ComplexMatrix cpt = build_CPT(s1, PhaseConvention::zero());
    const auto sec = cpt_eigensectors(cpt);
    CHECK(sec.plus_basis.size() == 6);
    CHECK(sec.minus_basis.size() == 6);
    CHECK(std::abs(sec.plus_basis[0][0] - cplx(r, 0)) < 1e-15);
    CHECK(std::abs(sec.plus_basis[0][11] - cplx(r, 0)) < 1e-15);

    // Massless: always 4 + 4.
    const SpinSpace ml = massless_allowed_states(5);
    const auto mlsec =
        cpt_eigensectors(build_CPT(ml, PhaseConvention::zero()));
    CHECK(mlsec.plus_basis.size() == 4);
    CHECK(mlsec.minus_basis.size() == 4);
}

TEST_CASE("eigensectors satisfy the eigenvalue equation for random phases")
{
    const SpinSpace space = massive_spin_s_space(1);
    Rng rng(99);
    const PhaseConvention phases = PhaseConvention::random_admissible(space, rng);
    const ComplexMatrix cpt = build_CPT(space, phases);
    const double phi = cpt_square_phase(cpt);
    ComplexMatrix w = cpt;
    w *= std::polar(1.0, -phi / 2.0);

    const auto sec = cpt_eigensectors(cpt);
    CHECK(sec.plus_basis.size() + sec.minus_basis.size() == space.dim());
    for (const auto& v : sec.plus_basis)
        CHECK(max_abs_diff(apply(w, v), v) < 1e-12);
    for (const auto& v : sec.minus_basis) {
        StateVector neg = v;
        kernels::active().scale(cplx(-1.0, 0.0), neg.data(), neg.dim());
        CHECK(max_abs_diff(apply(w, v), neg) < 1e-12);
    }
}

TEST_CASE("eigensectors fall back to the dense path off the permutation form")
{
    Rng rng(123);
    const ComplexMatrix u = random_unitary(6, rng);
    const ComplexMatrix w = u * anti_diagonal_ones(6) * u.adjoint();
    const auto sec = cpt_eigensectors(w);
    CHECK(sec.plus_basis.size() == 3);
    CHECK(sec.minus_basis.size() == 3);
    for (const auto& v : sec.plus_basis)
        CHECK(max_abs_diff(apply(w, v), v) < 1e-10);
    // Orthonormality across the full set.
    std::vector<StateVector> all = sec.plus_basis;
    all.insert(all.end(), sec.minus_basis.begin(), sec.minus_basis.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            CHECK(std::abs(inner(all[i], all[j]) - (i == j ? one : cplx(0, 0))) <
                  1e-10);
}

TEST_CASE("zero-phase sectors are d/2-fold degenerate for every space")
{
    for (int two_s = 1; two_s <= 8; ++two_s) {
        const SpinSpace space = massive_spin_s_space(two_s);
        const auto sec = cpt_eigensectors(build_CPT(space, PhaseConvention::zero()));
        CHECK(sec.plus_basis.size() == space.dim() / 2);
        CHECK(sec.minus_basis.size() == space.dim() / 2);
    }
    for (int two_s = 1; two_s <= 16; ++two_s) {
        const auto sec = cpt_eigensectors(
            build_CPT(massless_allowed_states(two_s), PhaseConvention::zero()));
        CHECK(sec.plus_basis.size() == 4);
        CHECK(sec.minus_basis.size() == 4);
    }
}

TEST_CASE("sector projectors are orthogonal idempotents summing to one")
{
    const SpinSpace space = massless_allowed_states(2);
    const ComplexMatrix cpt = build_CPT(space, PhaseConvention::zero());
    const ComplexMatrix p = sector_projector(cpt, +1);
    const ComplexMatrix q = sector_projector(cpt, -1);
    CHECK(max_abs_diff(p * p, p) < 1e-12);
    CHECK(max_abs_diff(q * q, q) < 1e-12);
    CHECK((p * q).max_abs() < 1e-12);
    CHECK(max_abs_diff(p + q, ComplexMatrix::identity(space.dim())) < 1e-12);
}

TEST_CASE("zero-phase CPT applied twice returns basis vectors exactly")
{
    const SpinSpace space = massive_spin_s_space(2);
    const ComplexMatrix cpt = build_CPT(space, PhaseConvention::zero());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        const StateVector e = StateVector::basis_state(space.dim(), j);
        CHECK(max_abs_diff(apply(cpt, apply(cpt, e)), e) == 0.0);
    }
}

// Gamma matrices, Dicke states, Bargmann-Wigner spaces and the Lemma-1
// machinery.

#include "cptkit/linalg.hpp"
#include "cptkit/spin_spaces.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace cptkit;
using namespace cptkit::testing;

namespace {
const cplx one(1.0, 0.0);
const cplx zero(0.0, 0.0);
} // namespace

TEST_CASE("gamma^0 is diag(1,1,-1,-1) and squares to the identity")
{
    const auto g = gamma_matrices();
    CHECK(max_abs_diff(g.g0, ComplexMatrix::diagonal({one, one, -one, -one})) == 0.0);
    CHECK(max_abs_diff(g.g0 * g.g0, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("Clifford algebra {g^mu, g^nu} = 2 eta^{mu nu}")
{
    const auto g = gamma_matrices();
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const ComplexMatrix anti = g.mu(mu) * g.mu(nu) + g.mu(nu) * g.mu(mu);
            ComplexMatrix expect = ComplexMatrix::identity(4);
            expect *= cplx(2.0 * (mu == nu ? eta[mu] : 0.0), 0.0);
            CHECK(max_abs_diff(anti, expect) < 1e-12);
        }
    }
}

TEST_CASE("gamma^5 swaps the bispinor halves and squares to one")
{
    const auto g = gamma_matrices();
    // Multiplying the four Dirac-representation matrices by hand gives the
    // off-diagonal block form [[0, 1], [1, 0]].
    ComplexMatrix expect(4, 4);
    expect(0, 2) = one;
    expect(1, 3) = one;
    expect(2, 0) = one;
    expect(3, 1) = one;
    CHECK(max_abs_diff(g.g5, expect) < 1e-15);
    CHECK(max_abs_diff(g.g5 * g.g5, ComplexMatrix::identity(4)) < 1e-15);
    CHECK(g.g5.is_unitary());
}

TEST_CASE("gamma^5 commutes with every sigma^{alpha beta}")
{
    const auto g = gamma_matrices();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const ComplexMatrix s = gamma_sigma(g, a, b);
            CHECK(max_abs_diff(g.g5 * s, s * g.g5) < 1e-12);
        }
}

TEST_CASE("all gamma matrices are unitary")
{
    const auto g = gamma_matrices();
    for (int m : {0, 1, 2, 3, 5})
        CHECK(g.mu(m).unitarity_residual() < 1e-15);
}

TEST_CASE("massive primitive basis: eight labels in canonical order")
{
    const SpinSpace space = massive_primitive_basis();
    CHECK(space.dim() == 8);
    CHECK(space.basis.front() == BasisLabel{+1, +1, +1, true, {}});
    // Closed under the simultaneous sign flip of (u, spin, p).
    for (const auto& l : space.basis) {
        BasisLabel f = l;
        f.u_sign = -f.u_sign;
        f.spin_z2 = -f.spin_z2;
        f.p_sign = -f.p_sign;
        CHECK(space.index_of(f).has_value());
    }
}

TEST_CASE("dicke_state(2,1) is the symmetrized two-primitive state")
{
    const StateVector d = dicke_state(2, 1);
    constexpr double r = 0.70710678118654752440;
    CHECK(std::abs(d[1] - cplx(r, 0)) < 1e-15); // |01>
    CHECK(std::abs(d[2] - cplx(r, 0)) < 1e-15); // |10>
    CHECK(std::abs(d[0]) == 0.0);
    CHECK(std::abs(d[3]) == 0.0);
}

TEST_CASE("dicke_state boundary and three-site cases")
{
    const StateVector top = dicke_state(3, 0);
    CHECK(std::abs(top[0] - one) < 1e-15);

    const StateVector d31 = dicke_state(3, 1);
    const double amp = 1.0 / std::sqrt(3.0);
    for (std::size_t idx : {std::size_t{1}, std::size_t{2}, std::size_t{4}})
        CHECK(std::abs(d31[idx] - cplx(amp, 0)) < 1e-15);
    CHECK(std::abs(d31[0]) == 0.0);
    CHECK(std::abs(d31[7]) == 0.0);

    CHECK_THROWS_AS((void)dicke_state(3, 4), DomainError);
}

TEST_CASE("dicke states are permutation symmetric and orthonormal")
{
    for (unsigned n : {2u, 3u, 5u}) {
        for (unsigned k = 0; k <= n; ++k) {
            const StateVector d = dicke_state(n, k);
            for (unsigned a = 0; a + 1 < n; ++a) {
                const StateVector swapped = apply(swap_sites(n, a, a + 1), d);
                CHECK(max_abs_diff(swapped, d) == 0.0);
            }
            for (unsigned kp = 0; kp <= n; ++kp) {
                const cplx ip = inner(d, dicke_state(n, kp));
                CHECK(std::abs(ip - (k == kp ? one : zero)) < 1e-12);
            }
        }
    }
}

TEST_CASE("massive spin spaces have dimension 4(2s+1)")
{
    CHECK(massive_spin_s_space(2).dim() == 12); // the 12x12 spin-1 case
    CHECK(massive_spin_s_space(1).dim() == 8);
    CHECK(massive_spin_s_space(3).dim() == 16);
    for (int two_s = 1; two_s <= 8; ++two_s)
        CHECK(massive_spin_s_space(two_s).dim() ==
              4 * (static_cast<std::size_t>(two_s) + 1));
    CHECK_THROWS_AS((void)massive_spin_s_space(0), DomainError);
}

TEST_CASE("embedded states: s = 1/2 reduces to the primitive basis")
{
    const SpinSpace space = massive_spin_s_space(1);
    // One primitive: the Dicke factor is a bare qubit, so every embedded
    // vector is a computational basis state of the 4x2-dim embedding.
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const StateVector v = space.embedded_state(i);
        double mass = 0.0;
        for (std::size_t j = 0; j < v.dim(); ++j)
            mass += std::norm(v[j]);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
        std::size_t support = 0;
        for (std::size_t j = 0; j < v.dim(); ++j)
            if (std::abs(v[j]) > 0)
                ++support;
        CHECK(support == 1);
    }
}

TEST_CASE("embedded states: s = 3/2, M = +1/2 particle is dicke(3,1)")
{
    const SpinSpace space = massive_spin_s_space(3);
    CHECK(space.dim() == 16);
    const auto idx = space.index_of(BasisLabel{+1, +1, +1, true, {}});
    REQUIRE(idx.has_value());
    const StateVector v = space.embedded_state(*idx);
    const StateVector d = dicke_state(3, 1);
    // Sector (+u, +p) occupies the first block of the embedding.
    for (std::size_t j = 0; j < d.dim(); ++j)
        CHECK(std::abs(v[j] - d[j]) < 1e-15);
    for (std::size_t j = d.dim(); j < v.dim(); ++j)
        CHECK(std::abs(v[j]) == 0.0);
}

TEST_CASE("embedded states are mutually orthonormal")
{
    const SpinSpace space = massive_spin_s_space(2);
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const StateVector vi = space.embedded_state(i);
        for (std::size_t j = i; j < space.dim(); ++j) {
            const cplx ip = inner(vi, space.embedded_state(j));
            CHECK(std::abs(ip - (i == j ? one : zero)) < 1e-12);
        }
    }
}

TEST_CASE("embedding respects the explicit cap")
{
    const int saved = explicit_two_s_cap();
    set_explicit_two_s_cap(2);
    const SpinSpace space = massive_spin_s_space(3);
    CHECK(space.dim() == 16); // labels still fine
    CHECK_THROWS_AS((void)space.embedded_state(0), CapacityError);
    set_explicit_two_s_cap(saved);
}

TEST_CASE("chirality operators: single site and Dicke eigenvalues")
{
    const auto ops1 = chirality_operators(1);
    CHECK(max_abs_diff(ops1.total, ops1.local[0]) == 0.0);

    for (unsigned n : {2u, 3u, 4u}) {
        const auto ops = chirality_operators(n);
        for (unsigned k = 0; k <= n; ++k) {
            const StateVector d = dicke_state(n, k);
            const double m = (static_cast<double>(n) - 2.0 * k) / 2.0;
            StateVector expect = d;
            kernels::active().scale(cplx(m, 0.0), expect.data(), expect.dim());
            CHECK(max_abs_diff(apply(ops.total, d), expect) < 1e-13);
        }
        // The sum over sites is permutation symmetric.
        for (unsigned a = 0; a + 1 < n; ++a) {
            const ComplexMatrix p = swap_sites(n, a, a + 1);
            CHECK(max_abs_diff(ops.total * p, p * ops.total) == 0.0);
        }
    }
}

TEST_CASE("massless spaces are eight-dimensional for every spin")
{
    for (int two_s = 1; two_s <= 16; ++two_s) {
        const SpinSpace space = massless_allowed_states(two_s);
        CHECK(space.dim() == 8);
        for (const auto& l : space.basis) {
            CHECK(std::abs(l.spin_z2) == two_s);
            CHECK((l.helicity() == 1 || l.helicity() == -1));
        }
    }
}

TEST_CASE("massless spin-1 space matches the explicit construction")
{
    const SpinSpace space = massless_allowed_states(2);
    // Four particle states: spin aligned or anti-aligned with +-p.
    for (int p : {+1, -1})
        for (int m2 : {+2, -2}) {
            CHECK(space.index_of(BasisLabel{+1, m2, p, false, {}}).has_value());
            CHECK(space.index_of(BasisLabel{-1, m2, p, false, {}}).has_value());
        }
    // Product embeddings: k = 0 or 2s only.
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const StateVector v = space.embedded_state(i);
        std::size_t support = 0;
        for (std::size_t j = 0; j < v.dim(); ++j)
            if (std::abs(v[j]) > 0)
                ++support;
        CHECK(support == 1); // product (non-entangled) Dicke state
    }
}

TEST_CASE("lemma1 report: reduced weights, purity rule and conventions")
{
    for (int two_s : {1, 2, 3, 4}) {
        const Report r = lemma1_report(two_s);
        CHECK(r.all_pass());
    }

    // Spot values: s = 1, k = 1 gives diag(1/2, 1/2) with purity 1/2;
    // s = 3/2, k = 1 gives diag(2/3, 1/3).
    const ComplexMatrix rho_s1 =
        partial_trace(dicke_state(2, 1).projector(), {2, 2}, {0});
    CHECK(max_abs_diff(rho_s1, ComplexMatrix::diagonal({cplx(0.5, 0), cplx(0.5, 0)})) <
          1e-14);
    CHECK((rho_s1 * rho_s1).trace().real() == doctest::Approx(0.5).epsilon(1e-13));

    const ComplexMatrix rho_s32 =
        partial_trace(dicke_state(3, 1).projector(), {2, 2, 2}, {0});
    CHECK(max_abs_diff(rho_s32, ComplexMatrix::diagonal({cplx(2.0 / 3.0, 0),
                                                         cplx(1.0 / 3.0, 0)})) < 1e-14);

    // Brute-force oracle agreement across every n <= 6 and site choice.
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            const ComplexMatrix rho = dicke_state(n, k).projector();
            for (unsigned site = 0; site < n; ++site) {
                const ComplexMatrix expect = ComplexMatrix::diagonal(
                    {cplx((n - k) / static_cast<double>(n), 0),
                     cplx(k / static_cast<double>(n), 0)});
                CHECK(max_abs_diff(naive_single_site_reduction(rho, n, site), expect) <
                      1e-12);
            }
        }
}

TEST_CASE("helicity equals chirality for the allowed massless solutions")
{
    for (int spin : {+1, -1})
        for (int p : {+1, -1})
            CHECK(helicity_residual(massless_bispinor(spin, p), p) < 1e-12);

    // Equal superposition of opposite-helicity solutions is not a solution:
    // at fixed +p the two components carry distinct (chirality - helicity)
    // eigenvalues (0 and -2), so the residual is strictly positive.
    StateVector mix(4);
    const StateVector a = massless_bispinor(+1, +1);
    const StateVector b = massless_bispinor(+1, -1);
    for (std::size_t i = 0; i < 4; ++i)
        mix[i] = (a[i] + b[i]) * 0.70710678118654752;
    CHECK(helicity_residual(mix, +1) > 0.5);

    StateVector wrong(2);
    CHECK_THROWS_AS((void)helicity_residual(wrong, +1), ShapeError);
}

TEST_CASE("relativistic dispersion")
{
    CHECK(energy(0.0, 1.0) == 1.0);
    CHECK(energy(1.0, 0.0) == 1.0);
    CHECK(energy(3.0, 4.0) == 5.0);
    CHECK(energy(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS((void)energy(-1.0, 0.0), DomainError);
}

TEST_CASE("dicke index records both projection conventions")
{
    const DickeIndex idx(4, 1);
    CHECK(idx.m_times2() == 2);        // M = s - k = 1
    CHECK(idx.m_alt() == 0.0);         // s - 2k with s = 2
    CHECK(max_abs_diff(dicke_state(idx), dicke_state(4, 1)) == 0.0);
    CHECK_THROWS_AS(DickeIndex(2, 3), DomainError);
}

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial(3, 4) == 0);
}

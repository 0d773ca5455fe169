// tensor / partial_trace / entropy / evolve, checked against the independent
// oracles in oracles.hpp; expected values frozen from those oracles.

#include "cptkit/eigen.hpp"
#include "cptkit/linalg.hpp"
#include "cptkit/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace cptkit;
using namespace cptkit::testing;

namespace {

ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng)
{
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rng.gaussian_complex();
    return m;
}

} // namespace

TEST_CASE("tensor identity and diagonal cases")
{
    CHECK(max_abs_diff(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);
    const ComplexMatrix d12 = ComplexMatrix::diagonal({cplx(1, 0), cplx(2, 0)});
    const ComplexMatrix d34 = ComplexMatrix::diagonal({cplx(3, 0), cplx(4, 0)});
    const ComplexMatrix expect =
        ComplexMatrix::diagonal({cplx(3, 0), cplx(4, 0), cplx(6, 0), cplx(8, 0)});
    CHECK(max_abs_diff(tensor(d12, d34), expect) == 0.0);
}

TEST_CASE("tensor of sigma_x pair flips the 2-qubit basis state")
{
    // Hand expansion: (sx (x) sx) |00> = |11>.
    const ComplexMatrix sxsx = tensor(pauli_x(), pauli_x());
    const auto out = sxsx.apply({cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(0, 0)});
    CHECK(std::abs(out[0]) == 0.0);
    CHECK(std::abs(out[1]) == 0.0);
    CHECK(std::abs(out[2]) == 0.0);
    CHECK(std::abs(out[3] - cplx(1, 0)) == 0.0);
}

TEST_CASE("tensor agrees with the naive Kronecker oracle")
{
    Rng rng(11);
    const ComplexMatrix a = random_matrix(3, 2, rng);
    const ComplexMatrix b = random_matrix(2, 4, rng);
    CHECK(max_abs_diff(tensor(a, b), naive_kron(a, b)) < 1e-15);
}

TEST_CASE("tensor is associative up to exact index reordering")
{
    Rng rng(12);
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(3, 3, rng);
    const ComplexMatrix c = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-14);
}

TEST_CASE("tensor respects the dimension cap")
{
    const std::size_t saved = tensor_dim_cap();
    set_tensor_dim_cap(8);
    const ComplexMatrix m = ComplexMatrix::identity(4);
    CHECK_THROWS_AS((void)tensor(m, m), CapacityError);
    set_tensor_dim_cap(saved);
}

TEST_CASE("matrix product agrees with the naive oracle")
{
    Rng rng(13);
    const ComplexMatrix a = random_matrix(5, 7, rng);
    const ComplexMatrix b = random_matrix(7, 3, rng);
    CHECK(max_abs_diff(a * b, naive_matmul(a, b)) < 1e-13);
}

TEST_CASE("partial trace of a product state factorizes")
{
    Rng rng(14);
    const ComplexMatrix rho1 = random_density(2, rng);
    const ComplexMatrix rho2 = random_density(3, rng);
    const ComplexMatrix joint = tensor(rho1, rho2);
    CHECK(max_abs_diff(partial_trace(joint, {2, 3}, {0}), rho1) < 1e-14);
    CHECK(max_abs_diff(partial_trace(joint, {2, 3}, {1}), rho2) < 1e-14);
}

TEST_CASE("partial trace of the 2-qubit Dicke state by hand")
{
    // (|01> + |10>)/sqrt2: reduced state diag(1/2, 1/2) on either site.
    constexpr double r = 0.70710678118654752440;
    StateVector d(4);
    d[1] = cplx(r, 0.0);
    d[2] = cplx(r, 0.0);
    const ComplexMatrix rho = d.projector();
    const ComplexMatrix expect =
        ComplexMatrix::diagonal({cplx(0.5, 0.0), cplx(0.5, 0.0)});
    CHECK(max_abs_diff(partial_trace(rho, {2, 2}, {0}), expect) < 1e-15);
    CHECK(max_abs_diff(naive_single_site_reduction(rho, 2, 0), expect) < 1e-15);
}

TEST_CASE("partial trace of a maximally entangled pair is maximally mixed")
{
    constexpr double r = 0.70710678118654752440;
    StateVector bell(4);
    bell[0] = cplx(r, 0.0);
    bell[3] = cplx(r, 0.0);
    const ComplexMatrix reduced = partial_trace(bell.projector(), {2, 2}, {1});
    CHECK(max_abs_diff(reduced,
                       ComplexMatrix::diagonal({cplx(0.5, 0), cplx(0.5, 0)})) < 1e-15);
}

TEST_CASE("partial trace keeping every site returns the input exactly")
{
    Rng rng(15);
    const ComplexMatrix rho = random_density(6, rng);
    CHECK(max_abs_diff(partial_trace(rho, {2, 3}, {0, 1}), rho) == 0.0);
}

TEST_CASE("partial trace preserves the trace and rejects bad shapes")
{
    Rng rng(16);
    const ComplexMatrix rho = random_density(8, rng);
    const ComplexMatrix red = partial_trace(rho, {2, 2, 2}, {1});
    CHECK(std::abs(red.trace() - rho.trace()) < 1e-14);
    CHECK_THROWS_AS((void)partial_trace(rho, {2, 3}, {0}), ShapeError);
    CHECK_THROWS_AS((void)partial_trace(rho, {2, 2, 2}, {5}), ShapeError);
}

TEST_CASE("entropy of pure, uniform and biased spectra")
{
    StateVector pure(3);
    pure[1] = cplx(1.0, 0.0);
    CHECK(von_neumann_entropy(pure.projector()) == 0.0);

    CHECK(von_neumann_entropy(ComplexMatrix::diagonal({cplx(0.5, 0), cplx(0.5, 0)})) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // Direct evaluation: -(3/4 log2 3/4 + 1/4 log2 1/4) = 0.8112781244591328...
    const double direct = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
    const double got =
        von_neumann_entropy(ComplexMatrix::diagonal({cplx(0.75, 0), cplx(0.25, 0)}));
    CHECK(got == doctest::Approx(direct).epsilon(1e-13));
    CHECK(got == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("entropy is invariant under unitary conjugation")
{
    Rng rng(17);
    const ComplexMatrix rho = random_density(5, rng);
    const ComplexMatrix u = random_unitary(5, rng);
    CHECK(von_neumann_entropy(u * rho * u.adjoint()) ==
          doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));
}

TEST_CASE("entropy rejects non-density inputs")
{
    CHECK_THROWS_AS((void)von_neumann_entropy(ComplexMatrix::identity(2)),
                    ValidationError);
}

TEST_CASE("evolve at t = 0 is the exact identity")
{
    Rng rng(18);
    const ComplexMatrix rho = random_density(4, rng);
    const ComplexMatrix h = random_hermitian(4, rng);
    CHECK(max_abs_diff(evolve(rho, h, 0.0), rho) == 0.0);
}

TEST_CASE("evolve under sigma_x for a quarter period flips the qubit")
{
    StateVector zero(2);
    zero[0] = cplx(1.0, 0.0);
    StateVector one(2);
    one[1] = cplx(1.0, 0.0);
    constexpr double half_pi = 1.57079632679489661923;
    const ComplexMatrix rho_t = evolve(zero.projector(), pauli_x(), half_pi);
    CHECK(max_abs_diff(rho_t, one.projector()) < 1e-14);

    // Cross-check the propagator against the closed-form Pauli exponential:
    // evolution_operator(H, t) = exp(-i H t) = exp_pauli(n, t) for H = n.sigma.
    CHECK(max_abs_diff(evolution_operator(pauli_x(), half_pi),
                       exp_pauli(1.0, 0.0, 0.0, half_pi)) < 1e-14);
}

TEST_CASE("stationary states stay put")
{
    Rng rng(19);
    const ComplexMatrix h = random_hermitian(4, rng);
    const auto eig = hermitian_eigen(h);
    // A mixture of H eigenprojectors commutes with H.
    ComplexMatrix rho(4, 4);
    const double weights[4] = {0.4, 0.3, 0.2, 0.1};
    for (std::size_t k = 0; k < 4; ++k) {
        StateVector v(4);
        for (std::size_t i = 0; i < 4; ++i)
            v[i] = eig.eigenvectors(i, k);
        ComplexMatrix p = v.projector();
        p *= cplx(weights[k], 0.0);
        rho = rho + p;
    }
    CHECK(max_abs_diff(evolve(rho, h, 1.7), rho) < 1e-12);
}

TEST_CASE("evolve preserves hermiticity, trace and spectrum")
{
    Rng rng(20);
    const ComplexMatrix rho = random_density(5, rng);
    const ComplexMatrix h = random_hermitian(5, rng);
    const ComplexMatrix out = evolve(rho, h, 2.3);
    CHECK(out.hermiticity_residual() < 1e-12);
    CHECK(std::abs(out.trace() - cplx(1.0, 0.0)) < 1e-12);
    auto before = hermitian_eigen(rho).eigenvalues;
    auto after = hermitian_eigen(out).eigenvalues;
    for (std::size_t i = 0; i < before.size(); ++i)
        CHECK(before[i] == doctest::Approx(after[i]).epsilon(1e-10));
}

TEST_CASE("evolve validates its inputs")
{
    Rng rng(21);
    const ComplexMatrix rho = random_density(3, rng);
    ComplexMatrix bad = random_matrix(3, 3, rng); // generically non-Hermitian
    CHECK_THROWS_AS((void)evolve(rho, bad, 1.0), ValidationError);
}

TEST_CASE("hermitian eigensolver residuals")
{
    Rng rng(22);
    for (std::size_t n : {2u, 5u, 12u, 24u}) {
        const ComplexMatrix h = random_hermitian(n, rng);
        const auto eig = hermitian_eigen(h);
        CHECK(eig.eigenvectors.unitarity_residual() < 1e-12);
        ComplexMatrix scaled = eig.eigenvectors;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                scaled(i, k) *= eig.eigenvalues[k];
        CHECK(max_abs_diff(h * eig.eigenvectors, scaled) < 1e-11);
        CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
    }
}

TEST_CASE("state vector basics")
{
    Rng rng(23);
    StateVector v = random_state(6, rng);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(inner(v, v) - cplx(1.0, 0.0)) < 1e-14);
    StateVector w(6);
    CHECK_THROWS_AS(w.normalize(), ValidationError);
}

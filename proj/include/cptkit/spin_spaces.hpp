// Basis labels, Dirac structures and symmetric (Dicke) state spaces for
// massive and massless spin-s systems at fixed momentum magnitude.
//
// Canonical basis order, used everywhere an operator matrix is written over
// a SpinSpace: particle sector before antiparticle; within a sector +p
// before -p; within that spin projection descending. Spin projections are
// stored doubled (spin_z2 = 2*m) so half-integers stay exact.

#pragma once

#include "cptkit/complex_matrix.hpp"
#include "cptkit/report.hpp"

#include <optional>
#include <vector>

namespace cptkit {

// Internal quantum number u = Q + (B-L). Only its sign enters any symmetry
// action; the magnitude is carried as an abstract rational, default 1.
struct Rational {
    int num = 1;
    int den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct BasisLabel {
    int u_sign = +1;  // +1 particle, -1 antiparticle
    int spin_z2 = 0;  // 2 * spin projection
    int p_sign = +1;  // momentum token +p / -p along the z axis
    bool massive = true;
    Rational u_mag{};

    // sign(spin_z) * sign(p); +/-1 for massless labels, 0 only when
    // spin_z = 0 (excluded from massless spaces).
    int helicity() const
    {
        return (spin_z2 > 0 ? 1 : spin_z2 < 0 ? -1 : 0) * p_sign;
    }

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

class SpinSpace {
public:
    int two_s = 0;
    bool massive = true;
    std::vector<BasisLabel> basis;

    std::size_t dim() const { return basis.size(); }
    std::optional<std::size_t> index_of(const BasisLabel& label) const;

    // Dimension of the explicit embedding: one 4-way (u-sign, p-sign) sector
    // factor times 2^{2s} spin primitives.
    std::size_t embedding_dim() const;

    // Explicit embedded vector for basis element `index`: the Dicke state of
    // 2s primitives in the label's sector slot. CapacityError beyond the
    // explicit cap.
    StateVector embedded_state(std::size_t index) const;
};

// Explicit tensor embeddings are limited to 2s <= this cap (default 8);
// label-level construction works for any spin.
int explicit_two_s_cap();
void set_explicit_two_s_cap(int cap);

struct GammaMatrices {
    ComplexMatrix g0, g1, g2, g3, g5;
    const ComplexMatrix& mu(int m) const; // 0..3, 5
};

// Dirac-representation gamma matrices; g5 is computed as i*g0*g1*g2*g3.
GammaMatrices gamma_matrices();

// sigma^{alpha,beta} = (i/2)[gamma^alpha, gamma^beta]
ComplexMatrix gamma_sigma(const GammaMatrices& g, int alpha, int beta);

// Spin along z on the bispinor space: Sigma^3 = i*g1*g2 (eigenvalues +/-1).
ComplexMatrix spin_along_z(const GammaMatrices& g);

unsigned long long binomial(unsigned n, unsigned k);

// Index of one Dicke state of n primitives with k lowered spins. Counting
// the +-1/2 local chirality eigenvalues gives the total projection
// M = s - k, in unit steps over 2s+1 values; m_alt records the alternative
// s - 2k bookkeeping (k flips counted against s instead of n = 2s) for
// cross-checks.
struct DickeIndex {
    unsigned n = 0;
    unsigned k = 0;

    DickeIndex(unsigned n_, unsigned k_) : n(n_), k(k_)
    {
        if (k > n)
            throw DomainError("DickeIndex: k must satisfy 0 <= k <= n");
    }

    int m_times2() const { return static_cast<int>(n) - 2 * static_cast<int>(k); }
    double m_alt() const { return n / 2.0 - 2.0 * k; }
};

// Equal-amplitude symmetric superposition of all C(n,k) strings of n
// spin-1/2 primitives with k lowered; site 0 is the slowest index.
StateVector dicke_state(unsigned n, unsigned k);
StateVector dicke_state(const DickeIndex& index);

// The eight-dimensional s = 1/2 space {|+-u, +-1/2, +-p>}.
SpinSpace massive_primitive_basis();

// Massive spin-s space of dimension 4(2s+1).
SpinSpace massive_spin_s_space(int two_s);

// Local chirality operators on n primitives (eigenvalues +-1/2 per site, the
// two-dimensional chirality-relevant factor) and their sum.
struct ChiralityOperators {
    std::vector<ComplexMatrix> local;
    ComplexMatrix total;
};
ChiralityOperators chirality_operators(unsigned n);

// Massless spin-s space: always eight labels, spin_z = +-s only, each
// embedded as a product (k in {0, 2s}) Dicke state.
SpinSpace massless_allowed_states(int two_s);

// Single-site reduced states of every Dicke state of 2s primitives: exact
// partial-trace weights, purity, total-chirality eigenvalue and local
// eigenstate status, with the two M-labelling conventions recorded.
Report lemma1_report(int two_s);

// Norm of (gamma^5 - Sigma.p/|p|) applied to a one-primitive massless
// bispinor state; zero for allowed solutions.
double helicity_residual(const StateVector& state, int p_sign);

// The definite-helicity bispinor solution for the given spin and momentum
// signs: chirality equals helicity = spin_sign * p_sign.
StateVector massless_bispinor(int spin_sign, int p_sign);

// sqrt(|p|^2 + m^2) in natural units (c = 1).
double energy(double mass, double momentum);

} // namespace cptkit

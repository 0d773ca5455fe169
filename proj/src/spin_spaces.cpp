#include "cptkit/spin_spaces.hpp"

#include "cptkit/linalg.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <string>

namespace cptkit {

namespace {

std::atomic<int> g_explicit_cap{8};

// Sector slot for the explicit embedding, matching canonical label order.
std::size_t sector_index(const BasisLabel& l)
{
    return (l.u_sign > 0 ? 0u : 2u) + (l.p_sign > 0 ? 0u : 1u);
}

} // namespace

int explicit_two_s_cap() { return g_explicit_cap.load(); }
void set_explicit_two_s_cap(int cap) { g_explicit_cap.store(cap); }

std::optional<std::size_t> SpinSpace::index_of(const BasisLabel& label) const
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == label)
            return i;
    return std::nullopt;
}

std::size_t SpinSpace::embedding_dim() const
{
    return std::size_t{4} << two_s;
}

StateVector SpinSpace::embedded_state(std::size_t index) const
{
    if (index >= basis.size())
        throw LookupError("embedded_state: basis index out of range");
    if (two_s > explicit_two_s_cap())
        throw CapacityError("explicit embedding capped at 2s = " +
                            std::to_string(explicit_two_s_cap()));
    const BasisLabel& l = basis[index];
    const unsigned n = static_cast<unsigned>(two_s);
    const unsigned k = static_cast<unsigned>((two_s - l.spin_z2) / 2);
    const StateVector dicke = dicke_state(n, k);
    StateVector out(embedding_dim());
    const std::size_t block = sector_index(l) * dicke.dim();
    for (std::size_t i = 0; i < dicke.dim(); ++i)
        out[block + i] = dicke[i];
    return out;
}

const ComplexMatrix& GammaMatrices::mu(int m) const
{
    switch (m) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    case 5: return g5;
    default: throw LookupError("gamma index must be 0..3 or 5");
    }
}

GammaMatrices gamma_matrices()
{
    const cplx o(1.0, 0.0), z(0.0, 0.0), i(0.0, 1.0);
    GammaMatrices g;
    g.g0 = ComplexMatrix::from_rows({{o, z, z, z},
                                     {z, o, z, z},
                                     {z, z, -o, z},
                                     {z, z, z, -o}});
    g.g1 = ComplexMatrix::from_rows({{z, z, z, o},
                                     {z, z, o, z},
                                     {z, -o, z, z},
                                     {-o, z, z, z}});
    g.g2 = ComplexMatrix::from_rows({{z, z, z, -i},
                                     {z, z, i, z},
                                     {z, i, z, z},
                                     {-i, z, z, z}});
    g.g3 = ComplexMatrix::from_rows({{z, z, o, z},
                                     {z, z, z, -o},
                                     {-o, z, z, z},
                                     {z, o, z, z}});
    g.g5 = i * (g.g0 * g.g1 * g.g2 * g.g3);
    return g;
}

ComplexMatrix gamma_sigma(const GammaMatrices& g, int alpha, int beta)
{
    const ComplexMatrix comm = g.mu(alpha) * g.mu(beta) - g.mu(beta) * g.mu(alpha);
    return cplx(0.0, 0.5) * comm;
}

ComplexMatrix spin_along_z(const GammaMatrices& g)
{
    return cplx(0.0, 1.0) * (g.g1 * g.g2);
}

unsigned long long binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned long long r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
    }
    return r;
}

StateVector dicke_state(unsigned n, unsigned k)
{
    if (k > n)
        throw DomainError("dicke_state: k must satisfy 0 <= k <= n");
    if (n >= 63 || (std::size_t{1} << n) > tensor_dim_cap())
        throw CapacityError("dicke_state: 2^n exceeds the dimension cap");
    const std::size_t dim = std::size_t{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
    StateVector v(dim);
    for (std::size_t x = 0; x < dim; ++x)
        if (std::popcount(x) == static_cast<int>(k))
            v[x] = cplx(amp, 0.0);
    return v;
}

StateVector dicke_state(const DickeIndex& index)
{
    return dicke_state(index.n, index.k);
}

SpinSpace massive_primitive_basis()
{
    return massive_spin_s_space(1);
}

SpinSpace massive_spin_s_space(int two_s)
{
    if (two_s < 1)
        throw DomainError("massive space needs 2s >= 1");
    SpinSpace space;
    space.two_s = two_s;
    space.massive = true;
    for (int u : {+1, -1})
        for (int p : {+1, -1})
            for (int m2 = two_s; m2 >= -two_s; m2 -= 2)
                space.basis.push_back(BasisLabel{u, m2, p, true, {}});
    return space;
}

ChiralityOperators chirality_operators(unsigned n)
{
    if (n < 1)
        throw DomainError("chirality_operators: n >= 1 required");
    if (n >= 63 || (std::size_t{1} << n) > tensor_dim_cap())
        throw CapacityError("chirality_operators: 2^n exceeds the dimension cap");
    const std::size_t dim = std::size_t{1} << n;
    ChiralityOperators ops;
    ops.total = ComplexMatrix(dim, dim);
    for (unsigned site = 0; site < n; ++site) {
        ComplexMatrix local(dim, dim);
        const std::size_t bit = std::size_t{1} << (n - 1 - site); // site 0 slowest
        for (std::size_t x = 0; x < dim; ++x)
            local(x, x) = cplx((x & bit) ? -0.5 : 0.5, 0.0);
        ops.total = ops.total + local;
        ops.local.push_back(std::move(local));
    }
    return ops;
}

SpinSpace massless_allowed_states(int two_s)
{
    if (two_s < 1)
        throw DomainError("massless space needs 2s >= 1");
    SpinSpace space;
    space.two_s = two_s;
    space.massive = false;
    for (int u : {+1, -1})
        for (int p : {+1, -1})
            for (int m2 : {two_s, -two_s})
                space.basis.push_back(BasisLabel{u, m2, p, false, {}});
    return space;
}

Report lemma1_report(int two_s)
{
    if (two_s < 1)
        throw DomainError("lemma1_report needs 2s >= 1");
    if (two_s > explicit_two_s_cap())
        throw CapacityError("lemma1_report: 2s exceeds the explicit cap");

    const unsigned n = static_cast<unsigned>(two_s);
    Report report;
    report.suite = "lemma1(2s=" + std::to_string(two_s) + ")";

    const auto chir = chirality_operators(n);
    const ComplexMatrix gamma5_local =
        ComplexMatrix::from_rows({{cplx(0.5, 0.0), cplx(0.0, 0.0)},
                                  {cplx(0.0, 0.0), cplx(-0.5, 0.0)}});

    bool boundary_rule_holds = true;
    for (unsigned k = 0; k <= n; ++k) {
        const DickeIndex index(n, k);
        const StateVector d = dicke_state(index);
        const std::string tag = "k=" + std::to_string(k);

        // Total chirality eigenvalue M = s - k.
        const double m_gamma = index.m_times2() / 2.0;
        StateVector md = d;
        kernels::active().scale(cplx(m_gamma, 0.0), md.data(), md.dim());
        const double eig_res = max_abs_diff(apply(chir.total, d), md);
        report.require(tag + " total chirality eigenvalue", eig_res, tol::algebra,
                       "M(gamma5 counting)=s-k=" + std::to_string(m_gamma) +
                           "; M(s-2k bookkeeping)=" +
                           std::to_string(index.m_alt()));

        // Exact single-site reduced state.
        const ComplexMatrix rho1 = partial_trace(
            d.projector(), std::vector<std::size_t>(n, 2), {0});
        const double w_up = static_cast<double>(n - k) / n;
        const double w_down = static_cast<double>(k) / n;
        const double weight_res = max_abs_diff(
            rho1, ComplexMatrix::diagonal({cplx(w_up, 0.0), cplx(w_down, 0.0)}));

        // The binomial form C(s-1,s-k-1)/C(s,k), C(s-1,k-1)/C(s,k) uses s
        // where the construction has n = 2s primitives; it is evaluated
        // verbatim and flagged whenever it disagrees with the exact weights.
        std::string binomial_note;
        if (n % 2 == 0) {
            const unsigned s_int = n / 2;
            const double denom = static_cast<double>(binomial(s_int, k));
            if (denom > 0.0) {
                const double b_up =
                    static_cast<double>(binomial(s_int - 1, s_int - k - 1)) / denom;
                const double b_down =
                    static_cast<double>(binomial(s_int - 1, k - 1)) / denom;
                const bool mismatch = std::abs(b_up - w_up) > tol::algebra ||
                                      std::abs(b_down - w_down) > tol::algebra;
                binomial_note = "binomial-form coeffs=(" + std::to_string(b_up) +
                                "," + std::to_string(b_down) + ")" +
                                (mismatch ? " MISMATCH vs exact" : " match exact");
            } else {
                binomial_note = "binomial-form coeffs undefined (C(s,k) vanishes)";
            }
        } else {
            binomial_note = "binomial-form coeffs undefined for half-integer s";
        }
        report.require(tag + " reduced state = diag((n-k)/n, k/n)", weight_res,
                       tol::algebra, binomial_note);

        // Purity and local-chirality eigenstate status.
        const double purity = (rho1 * rho1).trace().real();
        const double purity_closed = w_up * w_up + w_down * w_down;
        const bool pure = std::abs(purity - 1.0) <= tol::algebra;
        const bool should_be_pure = (k == 0 || k == n);
        if (pure != should_be_pure)
            boundary_rule_holds = false;
        const double comm_res =
            max_abs_diff(rho1 * gamma5_local, gamma5_local * rho1);
        const bool eigenstate = pure && comm_res <= tol::algebra;
        report.require(tag + " purity", std::abs(purity - purity_closed),
                       tol::algebra,
                       std::string(pure ? "pure" : "mixed") +
                           (eigenstate ? "; local chirality eigenstate"
                                       : "; not a local chirality eigenstate"));
    }
    report.add("purity = 1 iff k in {0, 2s}", boundary_rule_holds,
               boundary_rule_holds ? 0.0 : 1.0, 0.5);
    return report;
}

StateVector massless_bispinor(int spin_sign, int p_sign)
{
    if ((spin_sign != 1 && spin_sign != -1) || (p_sign != 1 && p_sign != -1))
        throw DomainError("massless_bispinor: signs must be +-1");
    const double h = static_cast<double>(spin_sign * p_sign);
    const double r = 0.70710678118654752440;
    StateVector v(4);
    const std::size_t up = spin_sign > 0 ? 0 : 1;
    v[up] = cplx(r, 0.0);
    v[2 + up] = cplx(h * r, 0.0);
    return v;
}

double helicity_residual(const StateVector& state, int p_sign)
{
    if (state.dim() != 4)
        throw ShapeError("helicity_residual: expected a 4-dim bispinor state");
    const auto g = gamma_matrices();
    const ComplexMatrix op =
        g.g5 - cplx(static_cast<double>(p_sign), 0.0) * spin_along_z(g);
    return apply(op, state).norm();
}

double energy(double mass, double momentum)
{
    if (mass < 0.0 || momentum < 0.0)
        throw DomainError("energy: mass and |p| must be non-negative");
    return std::hypot(mass, momentum);
}

} // namespace cptkit

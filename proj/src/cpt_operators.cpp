#include "cptkit/cpt_operators.hpp"

#include "cptkit/eigen.hpp"

#include <cmath>
#include <set>
#include <string>

namespace cptkit {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

double wrap_angle(double a)
{
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}

double circular_distance(double a, double b)
{
    const double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, two_pi - d);
}

std::string label_text(const BasisLabel& l)
{
    return std::string("|") + (l.u_sign > 0 ? "+u," : "-u,") +
           std::to_string(l.spin_z2) + "/2," + (l.p_sign > 0 ? "+p>" : "-p>");
}

} // namespace

BasisLabel flipped(const BasisLabel& label, SymmetryOp op)
{
    BasisLabel out = label;
    if (op == SymmetryOp::C || op == SymmetryOp::CPT)
        out.u_sign = -out.u_sign;
    if (op == SymmetryOp::PT || op == SymmetryOp::CPT) {
        out.spin_z2 = -out.spin_z2;
        out.p_sign = -out.p_sign;
    }
    return out;
}

PhaseConvention PhaseConvention::random_admissible(const SpinSpace& space, Rng& rng)
{
    // The Klein composition law together with theta^CPT flip symmetry forces
    //   theta^C(u,-s,-p)  = theta^C(u,s,p) + a          a in {0, pi}
    //   theta^C(-u,s,p)   = c - theta^C(u,s,p)
    //   theta^PT(-u,s,p)  = theta^PT(u,s,p) + b         b in {0, pi}
    //   theta^PT(u,-s,-p) = d - theta^PT(u,s,p)
    // and pins the per-orbit base angles to f = (c-a)/2, g = (d-b)/2 up to
    // independent half-turn branches, so the free parameters are a, b, c, d
    // and two bits per (spin, momentum) flip orbit.
    constexpr double pi = 3.14159265358979323846264338328;
    const double a = rng.below(2) ? pi : 0.0;
    const double b = rng.below(2) ? pi : 0.0;
    const double c = rng.uniform(0.0, two_pi);
    const double d = rng.uniform(0.0, two_pi);

    PhaseConvention conv;
    std::set<std::pair<int, int>> seen;
    for (const BasisLabel& l : space.basis) {
        if (l.u_sign != +1)
            continue;
        if (seen.count({l.spin_z2, l.p_sign}) || seen.count({-l.spin_z2, -l.p_sign}))
            continue;
        seen.insert({l.spin_z2, l.p_sign});
        const double m = rng.below(2) ? pi : 0.0;
        const double n = rng.below(2) ? pi : 0.0;
        const double f = 0.5 * (c - a) + 0.5 * (m + n);
        const double g = 0.5 * (d - b) + 0.5 * (m - n);
        const BasisLabel pm = flipped(l, SymmetryOp::PT);  // (+u, -s, -p)
        const BasisLabel mp = flipped(l, SymmetryOp::C);   // (-u,  s,  p)
        const BasisLabel mm = flipped(l, SymmetryOp::CPT); // (-u, -s, -p)
        conv.set(l, f, g);
        conv.set(pm, f + a, d - g);
        conv.set(mp, c - f, g + b);
        conv.set(mm, c - f - a, d - g - b);
    }
    return conv;
}

void PhaseConvention::set(const BasisLabel& label, double theta_c, double theta_pt)
{
    table_[key(label)] = {wrap_angle(theta_c), wrap_angle(theta_pt)};
}

double PhaseConvention::theta_c(const BasisLabel& label) const
{
    const auto it = table_.find(key(label));
    return it == table_.end() ? 0.0 : it->second.first;
}

double PhaseConvention::theta_pt(const BasisLabel& label) const
{
    const auto it = table_.find(key(label));
    return it == table_.end() ? 0.0 : it->second.second;
}

double PhaseConvention::theta_cpt(const BasisLabel& label) const
{
    const auto it = table_.find(key(label));
    return it == table_.end() ? 0.0 : wrap_angle(it->second.first + it->second.second);
}

double PhaseConvention::theta(const BasisLabel& label, SymmetryOp op) const
{
    switch (op) {
    case SymmetryOp::C: return theta_c(label);
    case SymmetryOp::PT: return theta_pt(label);
    default: return theta_cpt(label);
    }
}

std::vector<std::tuple<int, int, int, double, double>> PhaseConvention::entries() const
{
    std::vector<std::tuple<int, int, int, double, double>> out;
    out.reserve(table_.size());
    for (const auto& [key, angles] : table_)
        out.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key),
                         angles.first, angles.second);
    return out;
}

double PhaseConvention::admissibility_residual(const SpinSpace& space) const
{
    double worst = 0.0;
    for (const BasisLabel& l : space.basis) {
        const double d =
            circular_distance(theta_cpt(l), theta_cpt(flipped(l, SymmetryOp::CPT)));
        worst = std::max(worst, d);
    }
    return worst;
}

ComplexMatrix build_symmetry(const SpinSpace& space, const PhaseConvention& phases,
                             SymmetryOp op)
{
    const std::size_t d = space.dim();
    ComplexMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const BasisLabel& src = space.basis[j];
        const BasisLabel image = flipped(src, op);
        const auto i = space.index_of(image);
        if (!i)
            throw ClosureError("image label missing from space: " + label_text(image));
        m(*i, j) = std::polar(1.0, phases.theta(src, op));
    }
    return m;
}

Report klein_group_report(const SpinSpace& space, const PhaseConvention& phases)
{
    Report report;
    report.suite = "klein";

    report.require("phase convention admissible",
                   phases.admissibility_residual(space), tol::algebra);

    const char* names[4] = {"1", "C", "PT", "CPT"};
    ComplexMatrix ops[4] = {ComplexMatrix::identity(space.dim()),
                            build_C(space, phases), build_PT(space, phases),
                            build_CPT(space, phases)};
    // Klein four-group composition table over indices {1, C, PT, CPT}.
    constexpr int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

    for (int g = 0; g < 4; ++g)
        report.require(std::string(names[g]) + " unitary",
                       ops[g].unitarity_residual(), tol::algebra);

    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const ComplexMatrix product = ops[a] * ops[b];
            const ComplexMatrix& expected = ops[table[a][b]];
            // Global phase read off a reference entry of the permutation.
            double phi = 0.0;
            for (std::size_t idx = 0; idx < expected.size(); ++idx) {
                if (std::abs(expected.data()[idx]) > 0.5) {
                    phi = std::arg(product.data()[idx] / expected.data()[idx]);
                    break;
                }
            }
            const double residual =
                max_abs_diff(product, cplx(std::polar(1.0, phi)) * expected);
            report.require(std::string(names[a]) + "*" + names[b] + " = " +
                               names[table[a][b]] + " up to phase",
                           residual, tol::algebra,
                           "global phase = " + std::to_string(phi));
        }
    }

    // {1, CPT} restriction: a projective representation of Z2.
    try {
        const double phi2 = cpt_square_phase(ops[3]);
        const ComplexMatrix sq = ops[3] * ops[3];
        const double res =
            max_abs_diff(sq, cplx(std::polar(1.0, phi2)) * ComplexMatrix::identity(space.dim()));
        report.require("CPT^2 proportional to identity (projective Z2)", res,
                       tol::algebra, "phase = " + std::to_string(phi2));
    } catch (const StructureError& e) {
        report.add("CPT^2 proportional to identity (projective Z2)", false, 1.0,
                   tol::algebra, e.what());
    }
    return report;
}

double cpt_square_phase(const ComplexMatrix& cpt, double structure_tol)
{
    if (!cpt.is_square())
        throw ShapeError("cpt_square_phase: non-square operator");
    const ComplexMatrix sq = cpt * cpt;
    const cplx d = sq(0, 0);
    if (std::abs(d) < 0.5)
        throw StructureError("CPT^2 is not proportional to the identity");
    const double res = max_abs_diff(sq, d * ComplexMatrix::identity(cpt.rows()));
    if (res > structure_tol || std::abs(std::abs(d) - 1.0) > structure_tol)
        throw StructureError("CPT^2 is not a pure phase times the identity");
    return std::arg(d);
}

namespace {

// Phase-free involution W = e^{-i phi/2} CPT.
ComplexMatrix involution_of(const ComplexMatrix& cpt)
{
    const double phi = cpt_square_phase(cpt);
    ComplexMatrix w = cpt;
    w *= std::polar(1.0, -phi / 2.0);
    return w;
}

} // namespace

ComplexMatrix sector_projector(const ComplexMatrix& cpt, int sign)
{
    const ComplexMatrix w = involution_of(cpt);
    ComplexMatrix p = ComplexMatrix::identity(cpt.rows()) +
                      cplx(sign > 0 ? 1.0 : -1.0, 0.0) * w;
    p *= cplx(0.5, 0.0);
    return p;
}

CptSectorDecomposition cpt_eigensectors(const ComplexMatrix& cpt)
{
    if (cpt.unitarity_residual() > tol::algebra)
        throw ValidationError("cpt_eigensectors: operator is not unitary");
    const ComplexMatrix w = involution_of(cpt);
    const std::size_t d = w.rows();

    // Fast path: W is a phase-decorated permutation. Its orbits are 1- or
    // 2-cycles, each contributing explicit eigenvectors.
    bool permutation = true;
    std::vector<std::size_t> target(d, 0);
    std::vector<cplx> weight(d);
    for (std::size_t j = 0; j < d && permutation; ++j) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const double mag = std::abs(w(i, j));
            if (mag > 0.5) {
                ++hits;
                target[j] = i;
                weight[j] = w(i, j);
            } else if (mag > tol::algebra) {
                permutation = false;
                break;
            }
        }
        if (hits != 1)
            permutation = false;
    }

    CptSectorDecomposition out;
    if (permutation) {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t m = target[j];
            if (m == j) {
                auto& side = weight[j].real() > 0.0 ? out.plus_basis : out.minus_basis;
                side.push_back(StateVector::basis_state(d, j));
            } else if (j < m) {
                StateVector plus(d), minus(d);
                plus[j] = cplx(inv_sqrt2, 0.0);
                plus[m] = weight[j] * inv_sqrt2;
                minus[j] = cplx(inv_sqrt2, 0.0);
                minus[m] = -weight[j] * inv_sqrt2;
                out.plus_basis.push_back(std::move(plus));
                out.minus_basis.push_back(std::move(minus));
            }
        }
        return out;
    }

    // General path: a unitary involution is Hermitian; diagonalize.
    if (w.hermiticity_residual() > 1e-9)
        throw StructureError("cpt_eigensectors: involution is not Hermitian");
    const auto eig = hermitian_eigen(w, 1e-9);
    for (std::size_t k = 0; k < d; ++k) {
        StateVector v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = eig.eigenvectors(i, k);
        (eig.eigenvalues[k] > 0.0 ? out.plus_basis : out.minus_basis)
            .push_back(std::move(v));
    }
    return out;
}

} // namespace cptkit

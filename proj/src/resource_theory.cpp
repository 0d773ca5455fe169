#include "cptkit/resource_theory.hpp"

#include "cptkit/linalg.hpp"

#include <cmath>
#include <string>

namespace cptkit {

bool GroupRep::has_antiunitary() const
{
    for (const auto& e : elements)
        if (e.antiunitary)
            return true;
    return false;
}

GroupRep GroupRep::z2_cpt(const ComplexMatrix& cpt)
{
    if (cpt.unitarity_residual() > tol::algebra)
        throw ValidationError("z2_cpt: operator is not unitary");
    GroupRep rep;
    rep.elements.push_back({"1", ComplexMatrix::identity(cpt.rows()), false});
    rep.elements.push_back({"CPT", cpt, false});
    return rep;
}

GroupRep GroupRep::klein(const SpinSpace& space, const PhaseConvention& phases)
{
    GroupRep rep;
    rep.elements.push_back({"1", ComplexMatrix::identity(space.dim()), false});
    rep.elements.push_back({"C", build_C(space, phases), false});
    rep.elements.push_back({"PT", build_PT(space, phases), false});
    rep.elements.push_back({"CPT", build_CPT(space, phases), false});
    return rep;
}

GroupRep GroupRep::z2_antiunitary(const ComplexMatrix& unitary_core,
                                  std::string basis_name)
{
    if (unitary_core.unitarity_residual() > tol::algebra)
        throw ValidationError("z2_antiunitary: core is not unitary");
    GroupRep rep;
    rep.conjugation_basis = std::move(basis_name);
    rep.elements.push_back({"1", ComplexMatrix::identity(unitary_core.rows()), false});
    rep.elements.push_back({"T", unitary_core, true});
    return rep;
}

ComplexMatrix conjugate_by(const GroupElement& g, const ComplexMatrix& rho)
{
    if (g.antiunitary)
        return g.op * rho.conjugate() * g.op.adjoint();
    return g.op * rho * g.op.adjoint();
}

InvarianceResult is_g_invariant(const ComplexMatrix& rho, const GroupRep& rep,
                                double tolerance)
{
    double worst = 0.0;
    for (const auto& g : rep.elements) {
        if (g.op.rows() != rho.rows())
            throw ShapeError("is_g_invariant: dimension mismatch");
        worst = std::max(worst, max_abs_diff(conjugate_by(g, rho), rho));
    }
    return {worst <= tolerance, worst};
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus)
    : kraus_(std::move(kraus))
{
    if (kraus_.empty())
        throw ValidationError("channel needs at least one Kraus operator");
    const std::size_t d = kraus_.front().rows();
    for (const auto& k : kraus_)
        if (k.rows() != d || k.cols() != d)
            throw ShapeError("Kraus operators must be square and equal-sized");
    if (trace_preservation_residual() > tol::spectral)
        throw ValidationError("channel is not trace preserving");
}

std::size_t QuantumChannel::dim() const { return kraus_.front().rows(); }

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const
{
    if (rho.rows() != dim())
        throw ShapeError("channel applied to wrong dimension");
    ComplexMatrix out(dim(), dim());
    for (const auto& k : kraus_)
        out = out + k * rho * k.adjoint();
    return out;
}

double QuantumChannel::trace_preservation_residual() const
{
    ComplexMatrix sum(dim(), dim());
    for (const auto& k : kraus_)
        sum = sum + k.adjoint() * k;
    return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

QuantumChannel QuantumChannel::identity(std::size_t dim)
{
    return QuantumChannel({ComplexMatrix::identity(dim)});
}

QuantumChannel QuantumChannel::cpt_twirl(const ComplexMatrix& cpt)
{
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    ComplexMatrix k0 = ComplexMatrix::identity(cpt.rows());
    k0 *= cplx(inv_sqrt2, 0.0);
    ComplexMatrix k1 = cpt;
    k1 *= cplx(inv_sqrt2, 0.0);
    return QuantumChannel({std::move(k0), std::move(k1)});
}

InvarianceResult is_g_covariant(const QuantumChannel& channel, const GroupRep& rep,
                                double tolerance)
{
    if (channel.trace_preservation_residual() > tol::spectral)
        throw ValidationError("is_g_covariant: channel is not trace preserving");
    const std::size_t d = channel.dim();

    // Spanning set of densities: e_i e_i^dag, and for i<j the symmetrized
    // real and imaginary matrix units |e_i + e_j>/sqrt2, |e_i + i e_j>/sqrt2.
    std::vector<ComplexMatrix> probes;
    for (std::size_t i = 0; i < d; ++i) {
        StateVector v(d);
        v[i] = cplx(1.0, 0.0);
        probes.push_back(v.projector());
    }
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            StateVector re(d), im(d);
            re[i] = cplx(inv_sqrt2, 0.0);
            re[j] = cplx(inv_sqrt2, 0.0);
            im[i] = cplx(inv_sqrt2, 0.0);
            im[j] = cplx(0.0, inv_sqrt2);
            probes.push_back(re.projector());
            probes.push_back(im.projector());
        }
    }

    double worst = 0.0;
    for (const auto& g : rep.elements) {
        if (g.op.rows() != d)
            throw ShapeError("is_g_covariant: dimension mismatch");
        for (const auto& rho : probes) {
            const ComplexMatrix lhs = conjugate_by(g, channel.apply(rho));
            const ComplexMatrix rhs = channel.apply(conjugate_by(g, rho));
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
    }
    return {worst <= tolerance, worst};
}

ComplexMatrix twirl(const ComplexMatrix& rho, const GroupRep& rep)
{
    if (rep.has_antiunitary())
        throw UnsupportedError("twirl over anti-unitary representations is excluded");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto& g : rep.elements)
        out = out + conjugate_by(g, rho);
    out *= cplx(1.0 / static_cast<double>(rep.elements.size()), 0.0);
    return out;
}

Report unitary_consistency_check(const ComplexMatrix& rho0, const ComplexMatrix& h,
                                 const std::vector<double>& t_samples,
                                 const GroupRep& rep, double tolerance)
{
    for (const auto& g : rep.elements) {
        if (g.antiunitary)
            throw PreconditionError("unitary_consistency_check: anti-unitary element " +
                                    g.label);
        const double comm = max_abs_diff(g.op * h, h * g.op);
        if (comm > tolerance)
            throw PreconditionError("[T(" + g.label + "), H] != 0, residual " +
                                    std::to_string(comm));
    }
    const auto initial = is_g_invariant(rho0, rep, tolerance);
    if (!initial.holds)
        throw PreconditionError("initial state is not G-invariant, residual " +
                                std::to_string(initial.residual));

    Report report;
    report.suite = "unitary-consistency";
    for (double t : t_samples) {
        const ComplexMatrix rho_t = evolve(rho0, h, t);
        const auto inv = is_g_invariant(rho_t, rep, tolerance);
        report.require("G-invariant at t=" + std::to_string(t), inv.residual,
                       tolerance);
    }
    return report;
}

Report antiunitary_inconsistency_demo(const GroupRep& rep, const ComplexMatrix& h,
                                      const StateVector& psi0, double t)
{
    const GroupElement* anti = nullptr;
    for (const auto& g : rep.elements)
        if (g.antiunitary)
            anti = &g;
    if (!anti)
        throw PreconditionError("demo requires an anti-unitary element");

    // T(iH) = -(iH)T for anti-unitary T = U K reads U conj(H) U^dagger = H.
    const double comm = max_abs_diff(anti->op * h.conjugate() * anti->op.adjoint(), h);
    if (comm > tol::spectral)
        throw PreconditionError("T does not commute with H in the anti-unitary sense, "
                                "residual " + std::to_string(comm));

    const ComplexMatrix rho0 = psi0.projector();
    const auto initial = is_g_invariant(rho0, rep, tol::algebra);
    if (!initial.holds)
        throw PreconditionError("initial state is not G-invariant, residual " +
                                std::to_string(initial.residual));

    // Stationary initial states show no violation; reject them.
    StateVector h_psi = apply(h, psi0);
    const cplx mean = inner(psi0, h_psi);
    kernels::active().axpy(-mean, psi0.data(), h_psi.data(), h_psi.dim());
    if (h_psi.norm() <= 1e-8)
        throw DegenerateDemoError("initial state is an H eigenstate; no violation possible");

    Report report;
    report.suite = "antiunitary-demo";
    report.add("conjugation basis", true, 0.0, 0.0, rep.conjugation_basis);

    const auto residual_at = [&](const ComplexMatrix& rho, double when) {
        return is_g_invariant(evolve(rho, h, when), rep, tol::algebra).residual;
    };

    // Pure-state variant.
    const double pure_t = residual_at(rho0, t);
    const double pure_0 = residual_at(rho0, 0.0);
    report.add("pure state: invariance broken at t=" + std::to_string(t),
               pure_t > 0.1, pure_t, 0.1, "pass means residual EXCEEDS threshold");
    report.require("pure state: invariant at t=0", pure_0, tol::algebra);

    // Mixed-state variant: blend with the maximally mixed state, which keeps
    // invariance and non-stationarity.
    ComplexMatrix mixed = rho0;
    mixed *= cplx(0.5, 0.0);
    ComplexMatrix floor = ComplexMatrix::identity(rho0.rows());
    floor *= cplx(0.5 / static_cast<double>(rho0.rows()), 0.0);
    mixed = mixed + floor;
    const double mixed_t = residual_at(mixed, t);
    const double mixed_0 = residual_at(mixed, 0.0);
    report.add("mixed state: invariance broken at t=" + std::to_string(t),
               mixed_t > 0.1, mixed_t, 0.1, "pass means residual EXCEEDS threshold");
    report.require("mixed state: invariant at t=0", mixed_0, tol::algebra);
    return report;
}

double tau_measure(const StateVector& psi,
                   const std::optional<ComplexMatrix>& basis_change)
{
    std::vector<cplx> coeffs;
    if (basis_change) {
        if (basis_change->unitarity_residual() > tol::algebra)
            throw ValidationError("tau_measure: basis change must be unitary");
        coeffs = basis_change->adjoint().apply(psi.amplitudes());
    } else {
        coeffs = psi.amplitudes();
    }
    cplx s(0.0, 0.0);
    for (const cplx& c : coeffs)
        s += c * c;
    return std::max(0.0, 1.0 - std::abs(s)); // clamp rounding, tau lives in [0, 1]
}

AlignmentRate alignment_rate(double q0)
{
    if (q0 < 0.0 || q0 > 1.0)
        throw DomainError("alignment_rate: q0 must be in [0, 1]");
    // |q0 - q1| through the larger weight: q_hi >= 1/2 makes 2*q_hi - 1 an
    // exact subtraction, so R(q0) and R(1 - q0) agree bit for bit.
    const double q_hi = std::max(q0, 1.0 - q0);
    const double gap = 2.0 * q_hi - 1.0;
    if (gap < 1e-15)
        return {true, 0.0};
    return {false, -2.0 * std::log2(gap)};
}

std::string to_string(const AlignmentRate& r)
{
    return r.infinite ? "inf" : std::to_string(r.bits);
}

StandardFormResult standard_form(const StateVector& psi, const ComplexMatrix& cpt)
{
    if (psi.dim() != cpt.rows())
        throw ShapeError("standard_form: dimension mismatch");
    const double phi = cpt_square_phase(cpt);
    StateVector w_psi = apply(cpt, psi);
    kernels::active().scale(std::polar(1.0, -phi / 2.0), w_psi.data(), w_psi.dim());

    StandardFormResult out;
    StateVector plus(psi.dim()), minus(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        plus[i] = (psi[i] + w_psi[i]) * 0.5;
        minus[i] = (psi[i] - w_psi[i]) * 0.5;
    }
    const double n_plus_sq = kernels::active().norm_sq(plus.data(), plus.dim());
    const double n_minus_sq = kernels::active().norm_sq(minus.data(), minus.dim());
    out.q0 = n_plus_sq;
    out.q1 = n_minus_sq;
    out.plus_present = n_plus_sq > 1e-24;
    out.minus_present = n_minus_sq > 1e-24;
    if (out.plus_present) {
        plus.normalize();
        out.plus_part = std::move(plus);
    } else {
        out.plus_part = StateVector::basis_state(psi.dim(), 0);
    }
    if (out.minus_present) {
        minus.normalize();
        out.minus_part = std::move(minus);
    } else {
        out.minus_part = StateVector::basis_state(psi.dim(), 0);
    }
    return out;
}

} // namespace cptkit

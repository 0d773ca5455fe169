#include "cptkit/dfs_codec.hpp"

#include "cptkit/rng.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace cptkit {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ComplexMatrix outer(const StateVector& a, const StateVector& b)
{
    ComplexMatrix m(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            m(i, j) = a[i] * std::conj(b[j]);
    return m;
}

} // namespace

DfsCode build_code(const SpinSpace& space, const ComplexMatrix& cpt, int sector_sign)
{
    if (cpt.rows() != space.dim())
        throw ShapeError("build_code: operator does not match the space");
    const auto sectors = cpt_eigensectors(cpt);
    DfsCode code;
    code.sector_sign = sector_sign >= 0 ? +1 : -1;
    code.codewords = code.sector_sign > 0 ? sectors.plus_basis : sectors.minus_basis;
    if (code.codewords.empty())
        throw StructureError("build_code: requested sector is empty");
    code.logical_dim = code.codewords.size();
    code.capacity_bits = std::log2(static_cast<double>(code.logical_dim));
    return code;
}

StateVector encode(std::span<const cplx> message, const DfsCode& code)
{
    if (message.size() != code.logical_dim)
        throw ValidationError("encode: message length must equal the logical dimension");
    double norm_sq = 0.0;
    for (const cplx& a : message)
        norm_sq += std::norm(a);
    if (std::abs(norm_sq - 1.0) > tol::algebra)
        throw ValidationError("encode: message must be normalized");
    StateVector out(code.codewords.front().dim());
    for (std::size_t j = 0; j < code.logical_dim; ++j)
        kernels::active().axpy(message[j], code.codewords[j].data(), out.data(),
                               out.dim());
    return out;
}

DecodeResult decode(const StateVector& state, const DfsCode& code)
{
    if (state.dim() != code.codewords.front().dim())
        throw ShapeError("decode: dimension mismatch");
    DecodeResult result;
    result.message.reserve(code.logical_dim);
    for (const auto& cw : code.codewords)
        result.message.push_back(inner(cw, state));
    // Out-of-code component by explicit reconstruction; numerically stable
    // where sqrt(|psi|^2 - sum |m_j|^2) is not.
    StateVector leak = state;
    for (std::size_t j = 0; j < code.logical_dim; ++j)
        kernels::active().axpy(-result.message[j], code.codewords[j].data(),
                               leak.data(), leak.dim());
    result.residual = leak.norm();
    return result;
}

QuantumChannel sector_dephasing_channel(const ComplexMatrix& cpt)
{
    // Kraus {1/sqrt2 I, 1/sqrt2 W}: averaging over a random +-1 phase
    // between the sectors.
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const ComplexMatrix w = sector_projector(cpt, +1) - sector_projector(cpt, -1);
    ComplexMatrix k0 = ComplexMatrix::identity(cpt.rows());
    k0 *= cplx(inv_sqrt2, 0.0);
    ComplexMatrix k1 = w;
    k1 *= cplx(inv_sqrt2, 0.0);
    return QuantumChannel({std::move(k0), std::move(k1)});
}

QuantumChannel code_space_depolarizing(const DfsCode& code, double p,
                                       std::size_t total_dim)
{
    if (p < 0.0 || p > 1.0)
        throw DomainError("code_space_depolarizing: p must be in [0, 1]");
    const std::size_t d = code.logical_dim;
    const double two_pi = 6.283185307179586476925286766559;

    ComplexMatrix p_code(total_dim, total_dim);
    for (const auto& cw : code.codewords)
        p_code = p_code + cw.projector();

    std::vector<ComplexMatrix> kraus;
    ComplexMatrix k0 = ComplexMatrix::identity(total_dim);
    k0 *= cplx(std::sqrt(1.0 - p), 0.0);
    kraus.push_back(std::move(k0));
    ComplexMatrix kq = ComplexMatrix::identity(total_dim) - p_code;
    kq *= cplx(std::sqrt(p), 0.0);
    kraus.push_back(std::move(kq));

    // Shift/clock pairs on the codeword basis, zero outside the sector.
    const double w_amp = std::sqrt(p) / static_cast<double>(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            ComplexMatrix u(total_dim, total_dim);
            for (std::size_t j = 0; j < d; ++j) {
                const cplx phase =
                    std::polar(w_amp, two_pi * static_cast<double>(b * j) /
                                          static_cast<double>(d));
                u = u + phase * outer(code.codewords[(j + a) % d], code.codewords[j]);
            }
            kraus.push_back(std::move(u));
        }
    }
    return QuantumChannel(std::move(kraus));
}

Report covariant_noise_trial(const DfsCode& code, const ComplexMatrix& cpt,
                             std::span<const cplx> message,
                             const QuantumChannel& noise, unsigned trials,
                             std::uint64_t seed)
{
    const GroupRep rep = GroupRep::z2_cpt(cpt);
    const auto covariance = is_g_covariant(noise, rep);
    if (!covariance.holds)
        throw PreconditionError("noise channel is not CPT-covariant, residual " +
                                std::to_string(covariance.residual));

    Report report;
    report.suite = "covariant-noise";
    report.seed = seed;
    report.require("noise channel CPT-covariant", covariance.residual, tol::spectral);

    const bool random_messages = message.empty();
    if (!random_messages && message.size() != code.logical_dim)
        throw ValidationError("covariant_noise_trial: bad message length");

    double sum = 0.0, sum_sq = 0.0, worst = 1.0;
    for (unsigned trial = 0; trial < trials; ++trial) {
        std::vector<cplx> m;
        if (random_messages) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
            StateVector raw = random_state(code.logical_dim, rng);
            m = raw.amplitudes();
        } else {
            m.assign(message.begin(), message.end());
        }
        const StateVector psi = encode(m, code);
        const ComplexMatrix rho_out = noise.apply(psi.projector());
        const double fidelity = inner(psi, apply(rho_out, psi)).real();
        sum += fidelity;
        sum_sq += fidelity * fidelity;
        worst = std::min(worst, fidelity);
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    const double stderr_ = trials > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
    report.add("mean decode fidelity", true, 1.0 - mean, 1.0,
               "mean=" + fmt(mean) + " stderr=" + fmt(stderr_) +
                   " min=" + fmt(worst) + " trials=" + std::to_string(trials));
    return report;
}

} // namespace cptkit

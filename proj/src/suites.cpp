#include "cptkit/suites.hpp"

#include "cptkit/alignment.hpp"
#include "cptkit/dfs_codec.hpp"
#include "cptkit/linalg.hpp"
#include "cptkit/momentum_grid.hpp"

#include <cmath>
#include <string>

namespace cptkit {

namespace {

SpinSpace make_space(int two_s, bool massive)
{
    return massive ? massive_spin_s_space(two_s) : massless_allowed_states(two_s);
}

PhaseConvention make_phases(const SpinSpace& space, bool random_phases,
                            std::uint64_t seed, const char* tag)
{
    if (!random_phases)
        return PhaseConvention::zero();
    Rng rng(derive_seed(seed, tag));
    return PhaseConvention::random_admissible(space, rng);
}

} // namespace

ComplexMatrix sector_block_hamiltonian(const ComplexMatrix& cpt, Rng& rng)
{
    const ComplexMatrix p_plus = sector_projector(cpt, +1);
    const ComplexMatrix p_minus = sector_projector(cpt, -1);
    const ComplexMatrix a = random_hermitian(cpt.rows(), rng);
    const ComplexMatrix b = random_hermitian(cpt.rows(), rng);
    return p_plus * a * p_plus + p_minus * b * p_minus;
}

ComplexMatrix invariant_density(const ComplexMatrix& cpt, Rng& rng)
{
    return twirl(random_density(cpt.rows(), rng), GroupRep::z2_cpt(cpt));
}

Report suite_klein(int two_s, bool massive, bool random_phases, std::uint64_t seed,
                   double tolerance)
{
    const SpinSpace space = make_space(two_s, massive);
    const PhaseConvention phases = make_phases(space, random_phases, seed, "klein-phases");
    Report report = klein_group_report(space, phases);
    report.seed = seed;
    for (auto& check : report.checks)
        if (check.tolerance == tol::algebra)
            check.tolerance = tolerance;
    return report;
}

Report suite_lemma1(int two_s)
{
    return lemma1_report(two_s);
}

Report suite_unitary_consistency(int two_s, bool massive, unsigned samples,
                                 std::uint64_t seed, double tolerance)
{
    const SpinSpace space = make_space(two_s, massive);
    const ComplexMatrix cpt = build_CPT(space, PhaseConvention::zero());
    Rng rng(derive_seed(seed, "unitary-consistency"));
    const ComplexMatrix h = sector_block_hamiltonian(cpt, rng);
    const ComplexMatrix rho0 = invariant_density(cpt, rng);
    std::vector<double> times{0.0};
    for (unsigned i = 1; i < samples; ++i)
        times.push_back(rng.uniform(0.0, 10.0));
    Report report = unitary_consistency_check(rho0, h, times,
                                              GroupRep::z2_cpt(cpt), tolerance);
    report.seed = seed;
    return report;
}

Report suite_antiunitary_demo(double t)
{
    // Two dimensions suffice: T = conjugation in the computational basis,
    // H = sigma_z (real, so T commutes with H in the anti-unitary sense),
    // psi0 = (1,1)/sqrt2 which is conjugation-invariant but not stationary.
    const ComplexMatrix sigma_z =
        ComplexMatrix::from_rows({{cplx(1.0, 0.0), cplx(0.0, 0.0)},
                                  {cplx(0.0, 0.0), cplx(-1.0, 0.0)}});
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    StateVector psi0(2);
    psi0[0] = cplx(inv_sqrt2, 0.0);
    psi0[1] = cplx(inv_sqrt2, 0.0);
    const GroupRep rep =
        GroupRep::z2_antiunitary(ComplexMatrix::identity(2), "computational");
    return antiunitary_inconsistency_demo(rep, sigma_z, psi0, t);
}

Report suite_momentum(int two_s, bool massive, std::size_t n_points, double p_max,
                      unsigned packets, bool random_phases, std::uint64_t seed,
                      double tolerance)
{
    const SpinSpace space = make_space(two_s, massive);
    const PhaseConvention phases =
        make_phases(space, random_phases, seed, "momentum-phases");
    const MomentumGrid grid = MomentumGrid::symmetric(n_points, p_max);
    const InternalLabels labels = massive
                                      ? InternalLabels::massive_labels(two_s)
                                      : InternalLabels::massless_labels(two_s);

    Report report;
    report.suite = "momentum";
    report.seed = seed;

    // Norm preservation over random wavepackets, and inner-product
    // preservation over all pairs of a random family.
    Rng rng(derive_seed(seed, "momentum-packets"));
    double worst_norm = 0.0;
    std::vector<TestFunction> family;
    std::vector<TestFunction> family_out;
    for (unsigned i = 0; i < packets; ++i) {
        const TestFunction phi = TestFunction::random(grid, labels, rng);
        const TestFunction out = cpt_on_testfn(phi, phases);
        worst_norm = std::max(worst_norm, std::abs(out.grid_norm() - phi.grid_norm()));
        if (family.size() < 8) {
            family.push_back(phi);
            family_out.push_back(out);
        }
    }
    double worst_inner = 0.0;
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            const cplx before = kernels::active().dot_conj(
                                    family[a].data(), family[b].data(),
                                    family[b].dim()) *
                                grid.step();
            const cplx after = kernels::active().dot_conj(
                                   family_out[a].data(), family_out[b].data(),
                                   family_out[b].dim()) *
                               grid.step();
            worst_inner = std::max(worst_inner, std::abs(before - after));
        }
    }
    report.require("grid CPT preserves norms (" + std::to_string(packets) +
                       " random wavepackets)",
                   worst_norm, tolerance);
    report.require("grid CPT preserves inner products (all family pairs)",
                   worst_inner, tolerance);

    // Linearity of the extension.
    {
        Rng lin_rng(derive_seed(seed, "momentum-linearity"));
        const TestFunction a = TestFunction::random(grid, labels, lin_rng);
        const TestFunction b = TestFunction::random(grid, labels, lin_rng);
        const cplx ca = lin_rng.gaussian_complex();
        const cplx cb = lin_rng.gaussian_complex();
        TestFunction combo(grid, labels);
        for (std::size_t i = 0; i < combo.dim(); ++i)
            combo.data()[i] = ca * a.data()[i] + cb * b.data()[i];
        const TestFunction lhs = cpt_on_testfn(combo, phases);
        const TestFunction ta = cpt_on_testfn(a, phases);
        const TestFunction tb = cpt_on_testfn(b, phases);
        double worst = 0.0;
        for (std::size_t i = 0; i < combo.dim(); ++i)
            worst = std::max(worst, std::abs(lhs.data()[i] - ca * ta.data()[i] -
                                             cb * tb.data()[i]));
        report.require("extension is linear (not anti-linear)", worst, tolerance);
    }

    // Exactly block-diagonal over shells.
    const Report mixing = no_shell_mixing_check(phases, grid, labels);
    for (const auto& c : mixing.checks)
        report.checks.push_back(c);

    // Every shell reproduces the fixed-p operator, and each block is unitary.
    const ComplexMatrix fixed_p = build_CPT(space, phases);
    double worst_shell = 0.0, worst_unitary = 0.0;
    for (double shell : grid.shell_magnitudes()) {
        const ComplexMatrix block = shell_restriction(phases, grid, labels, shell);
        worst_shell = std::max(worst_shell, max_abs_diff(block, fixed_p));
        worst_unitary = std::max(worst_unitary, block.unitarity_residual());
    }
    report.add("every shell block equals the fixed-p CPT label-for-label",
               worst_shell == 0.0, worst_shell, 0.0);
    report.require("shell blocks unitary", worst_unitary, tolerance);

    // Gaussian wavepacket mirror example (decay status reported in notes).
    {
        const double center = p_max / 4.0;
        const TestFunction packet =
            TestFunction::gaussian_packet(grid, labels, center, 1.0, 0);
        const TestFunction mirrored = cpt_on_testfn(packet, phases);
        const auto [u0, m0] = labels.labels[0];
        const std::size_t flipped_label = labels.index_of(-u0, -m0);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double theta = phases.theta_cpt(
                BasisLabel{-u0, -m0, grid.points()[i] >= 0.0 ? +1 : -1, massive, {}});
            const cplx expected =
                std::polar(1.0, theta) * packet.at(grid.mirror_index(i), 0);
            worst = std::max(worst,
                             std::abs(mirrored.at(i, flipped_label) - expected));
        }
        report.require("gaussian packet mirrors onto flipped labels", worst,
                       tolerance,
                       std::string("rapid_decay=") +
                           (packet.is_rapidly_decaying() ? "true" : "false"));
    }
    return report;
}

Report suite_dfs(int two_s, bool massive, int sector_sign, DfsNoise noise,
                 double noise_p, unsigned trials, std::uint64_t seed,
                 double tolerance)
{
    const SpinSpace space = make_space(two_s, massive);
    const ComplexMatrix cpt = build_CPT(space, PhaseConvention::zero());
    const DfsCode code = build_code(space, cpt, sector_sign);

    Report report;
    report.suite = "dfs";
    report.seed = seed;

    const std::size_t expected_dim =
        massive ? 2 * (static_cast<std::size_t>(two_s) + 1) : 4;
    report.add("logical dimension = " + std::to_string(expected_dim),
               code.logical_dim == expected_dim,
               std::abs(static_cast<double>(code.logical_dim) -
                        static_cast<double>(expected_dim)),
               0.5, "capacity_bits=" + std::to_string(code.capacity_bits));

    // Round trips, eigenstate closure and non-resource property.
    Rng rng(derive_seed(seed, "dfs-messages"));
    const GroupRep rep = GroupRep::z2_cpt(cpt);
    double worst_roundtrip = 0.0, worst_residual = 0.0, worst_eigen = 0.0,
           worst_invariance = 0.0;
    for (unsigned i = 0; i < trials; ++i) {
        const StateVector raw = random_state(code.logical_dim, rng);
        const StateVector psi = encode(raw.amplitudes(), code);
        const DecodeResult dec = decode(psi, code);
        for (std::size_t j = 0; j < code.logical_dim; ++j)
            worst_roundtrip =
                std::max(worst_roundtrip, std::abs(dec.message[j] - raw[j]));
        worst_residual = std::max(worst_residual, dec.residual);

        StateVector flipped = apply(cpt, psi);
        const double sign = code.sector_sign > 0 ? 1.0 : -1.0;
        kernels::active().axpy(cplx(-sign, 0.0), psi.data(), flipped.data(),
                               flipped.dim());
        worst_eigen = std::max(worst_eigen, flipped.norm());

        worst_invariance = std::max(
            worst_invariance, is_g_invariant(psi.projector(), rep).residual);
    }
    report.require("decode(encode(m)) = m", worst_roundtrip, tolerance);
    report.require("no leakage outside the code space", worst_residual, tolerance);
    report.require("encoded states are CPT eigenstates", worst_eigen, tolerance);
    report.require("encoded projectors are G-invariant (non-resources)",
                   worst_invariance, tolerance);

    // Noise trial with the closed-form oracle per channel.
    const QuantumChannel channel =
        noise == DfsNoise::Twirl ? QuantumChannel::cpt_twirl(cpt)
        : noise == DfsNoise::Dephase
            ? sector_dephasing_channel(cpt)
            : code_space_depolarizing(code, noise_p, space.dim());
    const Report noise_report = covariant_noise_trial(
        code, cpt, {}, channel, std::min(trials, 32u), derive_seed(seed, "dfs-noise"));
    for (const auto& c : noise_report.checks)
        report.checks.push_back(c);
    double mean_fidelity = 1.0;
    for (const auto& c : noise_report.checks)
        if (c.name == "mean decode fidelity")
            mean_fidelity = 1.0 - c.residual;
    const double expected_fidelity =
        noise == DfsNoise::Depolarize
            ? 1.0 - noise_p + noise_p / static_cast<double>(code.logical_dim)
            : 1.0;
    report.require("fidelity matches the channel's closed form",
                   std::abs(mean_fidelity - expected_fidelity),
                   std::max(tolerance, 1e-10),
                   "expected=" + std::to_string(expected_fidelity));
    return report;
}

} // namespace cptkit

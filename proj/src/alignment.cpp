#include "cptkit/alignment.hpp"

#include "cptkit/linalg.hpp"
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

struct ExperimentResult {
    double closed_error = 0.0;
    double empirical_error = 0.0;
    double sigma = 0.0;
    double mutual_info_bits = 0.0;
    double overlap_check_residual = 0.0;
    bool explicit_used = false;
};

// Bernoulli simulation of the optimal measurement; per-trial derived seeds
// keep trials independent and mergeable.
void simulate(double success_prob, unsigned trials, std::uint64_t seed,
              ExperimentResult& out)
{
    std::uint64_t joint[2][2] = {};
    for (unsigned i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const int g = rng.bernoulli(0.5) ? 1 : 0;
        const bool correct = rng.bernoulli(success_prob);
        const int guess = correct ? g : 1 - g;
        ++joint[g][guess];
    }
    const double n = static_cast<double>(trials);
    out.empirical_error = static_cast<double>(joint[0][1] + joint[1][0]) / n;
    double mi = 0.0;
    for (int g = 0; g < 2; ++g) {
        for (int y = 0; y < 2; ++y) {
            const double p = joint[g][y] / n;
            if (p <= 0.0)
                continue;
            const double pg = (joint[g][0] + joint[g][1]) / n;
            const double py = (joint[0][y] + joint[1][y]) / n;
            mi += p * std::log2(p / (pg * py));
        }
    }
    out.mutual_info_bits = mi;
}

ExperimentResult run_core(const AlignmentExperiment& experiment,
                          const ComplexMatrix& cpt, SimMode mode)
{
    const StateVector& psi = experiment.psi;
    if (psi.dim() != cpt.rows())
        throw ShapeError("run_experiment: dimension mismatch");
    if (experiment.copies < 1 || experiment.trials < 1)
        throw DomainError("run_experiment: copies and trials must be >= 1");

    ExperimentResult result;
    double copy_overlap = std::abs(overlap(psi, cpt));
    if (copy_overlap > 1.0)
        copy_overlap = 1.0; // rounding guard
    result.closed_error = helstrom_error(copy_overlap, experiment.copies);

    const double log_dim =
        experiment.copies * std::log2(static_cast<double>(psi.dim()));
    const bool fits =
        log_dim <= std::log2(static_cast<double>(tensor_dim_cap())) + 1e-9;
    if (mode == SimMode::Explicit && !fits)
        throw CapacityError("N-copy space exceeds the dimension cap; "
                            "use closed-form mode");
    result.explicit_used = mode != SimMode::ClosedForm && fits;

    double n_copy_overlap = std::pow(copy_overlap, experiment.copies);
    if (result.explicit_used) {
        // Materialize the N-copy vectors and discriminate in the big space.
        const StateVector psi_n = tensor_power(psi, experiment.copies);
        const StateVector phi_n = tensor_power(apply(cpt, psi), experiment.copies);
        const double explicit_overlap = std::abs(inner(psi_n, phi_n));
        result.overlap_check_residual = std::abs(explicit_overlap - n_copy_overlap);
        n_copy_overlap = std::min(explicit_overlap, 1.0);
    }

    const double p_success =
        0.5 * (1.0 + std::sqrt(1.0 - n_copy_overlap * n_copy_overlap));
    simulate(p_success, experiment.trials, experiment.seed, result);
    result.sigma = std::sqrt(result.closed_error * (1.0 - result.closed_error) /
                             static_cast<double>(experiment.trials));
    return result;
}

} // namespace

cplx overlap(const StateVector& psi, const ComplexMatrix& cpt)
{
    return inner(psi, apply(cpt, psi));
}

double helstrom_error(double overlap_mag, unsigned copies)
{
    if (overlap_mag < 0.0 || overlap_mag > 1.0)
        throw DomainError("helstrom_error: overlap magnitude must be in [0, 1]");
    const double c = std::pow(overlap_mag, 2.0 * copies);
    return 0.5 * (1.0 - std::sqrt(1.0 - c));
}

ComplexMatrix anti_diagonal_ones(std::size_t dim)
{
    ComplexMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        m(dim - 1 - j, j) = cplx(1.0, 0.0);
    return m;
}

StateVector standard_state(double q0)
{
    if (q0 < 0.0 || q0 > 1.0)
        throw DomainError("standard_state: q0 must be in [0, 1]");
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const double a = std::sqrt(q0);
    const double b = std::sqrt(1.0 - q0);
    StateVector v(2);
    v[0] = cplx((a + b) * inv_sqrt2, 0.0);
    v[1] = cplx((a - b) * inv_sqrt2, 0.0);
    return v;
}

Report run_experiment(const AlignmentExperiment& experiment, const ComplexMatrix& cpt,
                      SimMode mode)
{
    const ExperimentResult r = run_core(experiment, cpt, mode);

    Report report;
    report.suite = "alignment";
    report.seed = experiment.seed;
    report.add("closed-form error", true, r.closed_error, 1.0,
               std::string("mode=") + (r.explicit_used ? "explicit" : "closed-form"));
    if (r.explicit_used)
        report.require("N-copy overlap equals single-copy overlap^N",
                       r.overlap_check_residual, 1e-10);
    report.require("empirical error within 3 sigma of closed form",
                   std::abs(r.empirical_error - r.closed_error), 3.0 * r.sigma,
                   "empirical=" + fmt(r.empirical_error) +
                       " mutual_info_bits=" + fmt(r.mutual_info_bits));
    return report;
}

std::vector<SweepRow> alignment_sweep(const std::vector<double>& q0_grid,
                                      const std::vector<unsigned>& n_grid,
                                      unsigned trials, std::uint64_t seed)
{
    if (q0_grid.empty() || n_grid.empty())
        throw DomainError("alignment_sweep: grids must be non-empty");
    const ComplexMatrix cpt = anti_diagonal_ones(2);
    std::vector<SweepRow> rows;
    std::uint64_t stream = 0;
    for (double q0 : q0_grid) {
        for (unsigned n : n_grid) {
            AlignmentExperiment exp{standard_state(q0), n, trials,
                                    derive_seed(seed, stream++)};
            const ExperimentResult r = run_core(exp, cpt, SimMode::Auto);
            SweepRow row;
            row.q0 = q0;
            row.copies = n;
            row.rate = alignment_rate(q0);
            row.closed_form_error = r.closed_error;
            row.empirical_error = r.empirical_error;
            row.stderr_ = r.sigma;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "q0,N,alignment_rate,closed_form_error,empirical_error,stderr\n";
    for (const auto& r : rows) {
        out += fmt(r.q0);
        out += ',';
        out += std::to_string(r.copies);
        out += ',';
        out += r.rate.infinite ? "inf" : fmt(r.rate.bits);
        out += ',';
        out += fmt(r.closed_form_error);
        out += ',';
        out += fmt(r.empirical_error);
        out += ',';
        out += fmt(r.stderr_);
        out += '\n';
    }
    return out;
}

} // namespace cptkit

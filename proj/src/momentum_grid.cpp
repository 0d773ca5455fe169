#include "cptkit/momentum_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cptkit {

MomentumGrid MomentumGrid::symmetric(std::size_t n_points, double p_max,
                                     bool include_zero)
{
    if (n_points < 2 || n_points % 2 != 0)
        throw StructureError("momentum grid needs an even, positive point count");
    if (p_max <= 0.0)
        throw DomainError("momentum grid needs p_max > 0");
    MomentumGrid g;
    g.p_max_ = p_max;
    g.has_zero_ = include_zero;
    const std::size_t half = n_points / 2;
    g.step_ = p_max / static_cast<double>(half);
    for (std::size_t k = half; k >= 1; --k)
        g.points_.push_back(-static_cast<double>(k) * g.step_);
    if (include_zero)
        g.points_.push_back(0.0);
    for (std::size_t k = 1; k <= half; ++k)
        g.points_.push_back(static_cast<double>(k) * g.step_);
    return g;
}

std::size_t MomentumGrid::index_of(double p) const
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (std::abs(points_[i] - p) <= 1e-12 * std::max(1.0, p_max_))
            return i;
    throw LookupError("momentum " + std::to_string(p) + " is not on the grid");
}

std::size_t MomentumGrid::mirror_index(std::size_t i) const
{
    if (i >= points_.size())
        throw LookupError("grid index out of range");
    return points_.size() - 1 - i; // points are stored symmetrically
}

std::vector<double> MomentumGrid::shell_magnitudes() const
{
    std::vector<double> mags;
    for (double p : points_)
        if (p > 0.0)
            mags.push_back(p);
    return mags;
}

bool MomentumGrid::is_symmetric() const
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (std::abs(points_[i] + points_[mirror_index(i)]) > 1e-12)
            return false;
    return true;
}

InternalLabels InternalLabels::massive_labels(int two_s)
{
    if (two_s < 1)
        throw DomainError("internal labels need 2s >= 1");
    InternalLabels out;
    out.two_s = two_s;
    out.massive = true;
    for (int u : {+1, -1})
        for (int m2 = two_s; m2 >= -two_s; m2 -= 2)
            out.labels.emplace_back(u, m2);
    return out;
}

InternalLabels InternalLabels::massless_labels(int two_s)
{
    if (two_s < 1)
        throw DomainError("internal labels need 2s >= 1");
    InternalLabels out;
    out.two_s = two_s;
    out.massive = false;
    for (int u : {+1, -1})
        for (int m2 : {two_s, -two_s})
            out.labels.emplace_back(u, m2);
    return out;
}

std::size_t InternalLabels::index_of(int u_sign, int spin_z2) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == std::pair<int, int>{u_sign, spin_z2})
            return i;
    throw LookupError("internal label not present");
}

TestFunction::TestFunction(MomentumGrid grid, InternalLabels labels)
    : grid_(std::move(grid)), labels_(std::move(labels)),
      values_(grid_.size() * labels_.size(), cplx(0.0, 0.0))
{
}

cplx& TestFunction::at(std::size_t point, std::size_t internal)
{
    return values_[point * labels_.size() + internal];
}

const cplx& TestFunction::at(std::size_t point, std::size_t internal) const
{
    return values_[point * labels_.size() + internal];
}

double TestFunction::grid_norm() const
{
    return std::sqrt(kernels::active().norm_sq(values_.data(), values_.size()) *
                     grid_.step());
}

void TestFunction::normalize()
{
    const double n = grid_norm();
    if (n == 0.0)
        throw ValidationError("cannot normalize the zero test function");
    kernels::active().scale(cplx(1.0 / n, 0.0), values_.data(), values_.size());
}

bool TestFunction::is_rapidly_decaying(double ratio) const
{
    double peak = 0.0;
    for (const cplx& v : values_)
        peak = std::max(peak, std::abs(v));
    if (peak == 0.0)
        return true;
    double edge = 0.0;
    const std::size_t n = grid_.size();
    for (std::size_t point : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
        for (std::size_t l = 0; l < labels_.size(); ++l)
            edge = std::max(edge, std::abs(at(point, l)));
    return edge < ratio * peak;
}

TestFunction TestFunction::gaussian_packet(const MomentumGrid& grid,
                                           const InternalLabels& labels,
                                           double center, double width,
                                           std::size_t internal_index)
{
    if (width <= 0.0)
        throw DomainError("gaussian_packet: width must be positive");
    if (internal_index >= labels.size())
        throw LookupError("gaussian_packet: internal index out of range");
    TestFunction phi(grid, labels);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double p = grid.points()[i];
        const double arg = (p - center) / width;
        phi.at(i, internal_index) = cplx(std::exp(-0.5 * arg * arg), 0.0);
    }
    phi.normalize();
    return phi;
}

TestFunction TestFunction::random(const MomentumGrid& grid, const InternalLabels& labels,
                                  Rng& rng)
{
    TestFunction phi(grid, labels);
    for (std::size_t i = 0; i < phi.dim(); ++i)
        phi.data()[i] = rng.gaussian_complex();
    phi.normalize();
    return phi;
}

TestFunction TestFunction::point_mass(const MomentumGrid& grid,
                                      const InternalLabels& labels, int u_sign,
                                      int spin_z2, std::size_t point)
{
    if (point >= grid.size())
        throw LookupError("point_mass: grid index out of range");
    TestFunction phi(grid, labels);
    phi.at(point, labels.index_of(u_sign, spin_z2)) =
        cplx(1.0 / std::sqrt(grid.step()), 0.0);
    return phi;
}

namespace {

void check_grid_compatible(const MomentumGrid& grid, const InternalLabels& labels)
{
    if (!grid.is_symmetric())
        throw StructureError("grid is not symmetric under p -> -p");
    if (grid.has_zero() && !labels.massive)
        throw StructureError("p = 0 has no massless partner; "
                             "zero-including grids are massive-only");
}

BasisLabel to_basis_label(const InternalLabels& labels, std::size_t internal,
                          double p)
{
    const auto [u, m2] = labels.labels[internal];
    return BasisLabel{u, m2, p >= 0.0 ? +1 : -1, labels.massive, {}};
}

} // namespace

TestFunction cpt_on_testfn(const TestFunction& phi, const PhaseConvention& phases)
{
    check_grid_compatible(phi.grid(), phi.labels());
    const auto& grid = phi.grid();
    const auto& labels = phi.labels();
    TestFunction out(grid, labels);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t l = 0; l < labels.size(); ++l) {
            const auto [u, m2] = labels.labels[l];
            const std::size_t li = labels.index_of(-u, -m2);
            const double theta =
                grid.points()[i] == 0.0
                    ? 0.0
                    : phases.theta_cpt(to_basis_label(labels, l, grid.points()[i]));
            out.at(i, l) = std::polar(1.0, theta) *
                           phi.at(grid.mirror_index(i), li);
        }
    }
    return out;
}

ComplexMatrix grid_cpt_matrix(const MomentumGrid& grid, const InternalLabels& labels,
                              const PhaseConvention& phases)
{
    check_grid_compatible(grid, labels);
    const std::size_t n_int = labels.size();
    const std::size_t d = grid.size() * n_int;
    ComplexMatrix m(d, d);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        for (std::size_t l = 0; l < n_int; ++l) {
            const auto [u, m2] = labels.labels[l];
            const std::size_t row =
                grid.mirror_index(j) * n_int + labels.index_of(-u, -m2);
            const double theta =
                grid.points()[j] == 0.0
                    ? 0.0
                    : phases.theta_cpt(to_basis_label(labels, l, grid.points()[j]));
            m(row, j * n_int + l) = std::polar(1.0, theta);
        }
    }
    return m;
}

ComplexMatrix shell_restriction(const PhaseConvention& phases, const MomentumGrid& grid,
                                const InternalLabels& labels, double shell_p)
{
    check_grid_compatible(grid, labels);
    if (shell_p <= 0.0)
        throw LookupError("shell magnitude must be positive");
    const std::size_t plus = grid.index_of(shell_p);
    const std::size_t minus = grid.index_of(-shell_p);

    // Shell basis in fixed-p canonical order: u block, then +p before -p,
    // then spin descending; labels are already (u, spin desc) blocked.
    const std::size_t n_int = labels.size();
    const std::size_t per_u = n_int / 2;
    std::vector<std::size_t> flat; // flat grid index per shell slot
    flat.reserve(2 * n_int);
    for (std::size_t ub = 0; ub < 2; ++ub)
        for (std::size_t point : {plus, minus})
            for (std::size_t s = 0; s < per_u; ++s)
                flat.push_back(point * n_int + ub * per_u + s);

    const ComplexMatrix full = grid_cpt_matrix(grid, labels, phases);
    ComplexMatrix block(flat.size(), flat.size());
    for (std::size_t a = 0; a < flat.size(); ++a)
        for (std::size_t b = 0; b < flat.size(); ++b)
            block(a, b) = full(flat[a], flat[b]);
    return block;
}

Report no_shell_mixing_check(const PhaseConvention& phases, const MomentumGrid& grid,
                             const InternalLabels& labels)
{
    return no_shell_mixing_check_matrix(grid_cpt_matrix(grid, labels, phases), grid,
                                        labels);
}

Report no_shell_mixing_check_matrix(const ComplexMatrix& full, const MomentumGrid& grid,
                                    const InternalLabels& labels)
{
    Report report;
    report.suite = "no-shell-mixing";
    const std::size_t n_int = labels.size();
    double worst = 0.0;
    std::string location = "none";
    for (std::size_t r = 0; r < full.rows(); ++r) {
        for (std::size_t c = 0; c < full.cols(); ++c) {
            const double pr = std::abs(grid.points()[r / n_int]);
            const double pc = std::abs(grid.points()[c / n_int]);
            if (pr == pc)
                continue;
            const double mag = std::abs(full(r, c));
            if (mag > worst) {
                worst = mag;
                location = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
            }
        }
    }
    report.add("all off-shell blocks exactly zero", worst == 0.0, worst, 0.0,
               worst == 0.0 ? "" : "largest off-shell entry at " + location);
    return report;
}

} // namespace cptkit

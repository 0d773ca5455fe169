// CPT on discretized test functions of momentum: a finite symmetric grid
// stands in for the continuum of |u, s, p> labels. The grid inner product is
// <phi, psi> = sum conj(phi) psi * step.

#pragma once

#include "cptkit/cpt_operators.hpp"
#include "cptkit/report.hpp"
#include "cptkit/rng.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cptkit {

class MomentumGrid {
public:
    // n_points even; points are +-k*step for k = 1..n/2 with
    // step = p_max/(n/2). include_zero adds the p = 0 point (massive
    // systems only; the massless helicity constraint has no p = 0 partner).
    static MomentumGrid symmetric(std::size_t n_points = 32, double p_max = 4.0,
                                  bool include_zero = false);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double p_max() const { return p_max_; }
    double step() const { return step_; }
    bool has_zero() const { return has_zero_; }

    std::size_t index_of(double p) const;        // LookupError when absent
    std::size_t mirror_index(std::size_t i) const; // index of -p
    std::vector<double> shell_magnitudes() const;  // distinct |p| > 0, ascending
    bool is_symmetric() const;

private:
    std::vector<double> points_;
    double p_max_ = 0.0;
    double step_ = 0.0;
    bool has_zero_ = false;
};

// The (u-sign, 2*spin_z) labels carried at every grid point: all 2(2s+1)
// combinations for massive systems, the four spin_z = +-s ones for massless.
// Order: particles first, spin descending (matches SpinSpace).
struct InternalLabels {
    int two_s = 1;
    bool massive = true;
    std::vector<std::pair<int, int>> labels;

    static InternalLabels massive_labels(int two_s);
    static InternalLabels massless_labels(int two_s);

    std::size_t size() const { return labels.size(); }
    std::size_t index_of(int u_sign, int spin_z2) const; // LookupError
};

// phi(u, s, p_i) on the grid; flat index = point * n_internal + internal.
class TestFunction {
public:
    TestFunction(MomentumGrid grid, InternalLabels labels);

    const MomentumGrid& grid() const { return grid_; }
    const InternalLabels& labels() const { return labels_; }
    std::size_t dim() const { return values_.size(); }

    cplx& at(std::size_t point, std::size_t internal);
    const cplx& at(std::size_t point, std::size_t internal) const;
    cplx* data() { return values_.data(); }
    const cplx* data() const { return values_.data(); }

    double grid_norm() const;
    void normalize();

    // |phi| on the two outermost shells below `ratio` of the max amplitude
    // (the discrete stand-in for rapid decrease).
    bool is_rapidly_decaying(double ratio = 1e-6) const;

    // exp(-(p - center)^2 / (2 width^2)) on one internal label, normalized.
    static TestFunction gaussian_packet(const MomentumGrid& grid,
                                        const InternalLabels& labels,
                                        double center, double width,
                                        std::size_t internal_index = 0);
    static TestFunction random(const MomentumGrid& grid, const InternalLabels& labels,
                               Rng& rng);
    static TestFunction point_mass(const MomentumGrid& grid, const InternalLabels& labels,
                                   int u_sign, int spin_z2, std::size_t point);

private:
    MomentumGrid grid_;
    InternalLabels labels_;
    std::vector<cplx> values_;
};

// (CPT phi)(u, s, p) = e^{i theta^CPT(u,s,p)} phi(-u, -s, -p); the phase
// convention is shell-independent (keyed on the sign of p). StructureError
// on asymmetric grids or massless labels on a grid containing p = 0.
TestFunction cpt_on_testfn(const TestFunction& phi, const PhaseConvention& phases);

// The full grid CPT matrix over the flat index.
ComplexMatrix grid_cpt_matrix(const MomentumGrid& grid, const InternalLabels& labels,
                              const PhaseConvention& phases);

// The block of the grid CPT on the {+shell_p, -shell_p} subspace, ordered
// exactly like the fixed-p SpinSpace basis. LookupError when shell_p is not
// a grid magnitude.
ComplexMatrix shell_restriction(const PhaseConvention& phases, const MomentumGrid& grid,
                                const InternalLabels& labels, double shell_p);

// Asserts every off-shell block of the grid CPT is exactly zero.
Report no_shell_mixing_check(const PhaseConvention& phases, const MomentumGrid& grid,
                             const InternalLabels& labels);
// Same check on a caller-supplied operator matrix (negative-control fixtures).
Report no_shell_mixing_check_matrix(const ComplexMatrix& op, const MomentumGrid& grid,
                                    const InternalLabels& labels);

} // namespace cptkit

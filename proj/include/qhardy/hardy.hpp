#pragma once

#include <cstdint>
#include <vector>

#include "qhardy/quaternion.hpp"
#include "qhardy/series.hpp"
#include "qhardy/slice.hpp"

namespace qhardy {

/// Shared quadrature configuration.  circle_nodes = 0 selects a node count
/// of at least 2*degree + 1 (exact for squared moduli of polynomials);
/// an empty r_grid selects the default 20-point grid ending at 0.999.
struct QuadratureSpec {
    std::size_t circle_nodes = 0;
    std::vector<double> r_grid;
    std::size_t unit_samples = 128;
    std::uint64_t seed = 0;
    /// Per-node relative gap between the boundary value and the value at the
    /// last grid radius above which a trace node is marked non-convergent.
    double trace_tol = 0.05;

    std::size_t nodes_for(std::size_t degree) const;
    std::vector<double> radii() const;
    void validate() const;
};

struct SliceNormResult {
    double value = 0.0;
    double r_used = 0.0;
    double tail_bound = 0.0;
    bool divergent = false;
    /// Integral means along the resolved r_grid (divergence diagnostics).
    std::vector<double> means;
};

struct HardyNormEstimate {
    double p = 2.0;
    double value = 0.0;
    ImaginaryUnit achieved_unit = ImaginaryUnit::i();
    double r_used = 0.0;
    double truncation_error_bound = 0.0;
    bool divergent = false;
};

struct BoundaryTrace {
    ImaginaryUnit unit = ImaginaryUnit::i();
    std::vector<double> thetas;
    std::vector<Quaternion> values;
    /// 1 when the radial diagnostic converged (or the node is usable).
    std::vector<std::uint8_t> node_ok;
};

/// p-mean of |f| over the circle of radius r in the slice of I, p in (0, inf).
double circle_mean(const RegularSeries& f, const ImaginaryUnit& I, double r, double p,
                   const QuadratureSpec& spec = {});

/// sup of the circle means over the grid.  When the means plateau the limit is
/// realized by direct evaluation on the boundary circle (exact for the stored
/// polynomial); when they keep growing the result is flagged divergent and the
/// value at the largest grid radius is reported.
SliceNormResult slice_norm(const RegularSeries& f, const ImaginaryUnit& I, double p,
                           const QuadratureSpec& spec = {});

/// H^p norm: sup of slice norms over sampled units for finite p, sup of |f|
/// over sampled spheres for p = inf.
HardyNormEstimate hardy_norm(const RegularSeries& f, double p, const QuadratureSpec& spec = {});

/// p-mean of |f| over the 3-sphere of radius r (hypersurface measure).
double three_sphere_mean(const RegularSeries& f, double r, double p,
                         const QuadratureSpec& spec = {});

/// sup of the 3-sphere means over the grid and the boundary sphere.
double three_sphere_norm(const RegularSeries& f, double p, const QuadratureSpec& spec = {});

/// Boundary values f(e^{I theta}) at uniform nodes with a per-node radial
/// convergence diagnostic along the grid.
BoundaryTrace boundary_trace(const RegularSeries& f, const ImaginaryUnit& I,
                             const QuadratureSpec& spec = {});

/// Poisson integral of the trace at radius r, angle theta (same slice).
Quaternion poisson_reconstruct(const BoundaryTrace& trace, double r, double theta);

/// Boundary trace of f * g from the traces of f and g on one slice:
/// value(theta) = f~ * g~ evaluated through the conjugated boundary point.
/// Nodes where |f~| < tol * scale are flagged and set to zero.
BoundaryTrace boundary_star_product(const BoundaryTrace& tf, const BoundaryTrace& tg,
                                    double tol = 1e-13);

/// p-mean (or max for p = inf) of |values| over usable nodes.
double trace_lp_norm(const BoundaryTrace& trace, double p);

}  // namespace qhardy

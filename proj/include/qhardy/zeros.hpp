#pragma once

#include <limits>
#include <vector>

#include "qhardy/quaternion.hpp"
#include "qhardy/series.hpp"

namespace qhardy {

enum class ZeroKind { Isolated, Spherical, Unclassified };

/// One zero locus of a polynomial over the quaternions: an isolated point
/// (possibly real) with its isolated multiplicity, or a whole 2-sphere
/// x + yS with its (even) spherical multiplicity.
struct ZeroRecord {
    ZeroKind kind = ZeroKind::Unclassified;
    Quaternion point;       // isolated zero (or best estimate)
    double x = 0.0;         // sphere parameters; for isolated zeros the
    double y = 0.0;         // sphere the point lies on (y >= 0)
    int multiplicity = 0;
    double residual = 0.0;  // |f| at the zero / max |f| over the sphere
    bool inside_ball = false;
};

struct ZeroFindOptions {
    /// Root clustering radius, relative to 1 + |z|.  A root of multiplicity m
    /// scatters like eps^(1/m) under the eigenvalue solve, so the default
    /// absorbs quadruple roots; lower it to separate zeros closer than this.
    double cluster_tol = 4e-4;
    double merge_tol = 1e-7;     // post-refinement cluster merge radius
    double class_tol = 1e-6;     // |J^2 + 1| bound when solving b + Jc = 0
    double vanish_tol = 1e-8;    // sphere/point vanishing test, relative to scale
    double max_radius = std::numeric_limits<double>::infinity();
};

/// Zero set of the stored polynomial: candidate spheres come from the real
/// roots structure of the symmetrization, classification from the affine
/// restriction to each sphere.  Records are sorted by distance from the
/// origin.  Throws on an identically zero input.
std::vector<ZeroRecord> find_zeros(const RegularSeries& f, const ZeroFindOptions& opt = {});

/// Listing convention: isolated zeros repeated by isolated multiplicity,
/// spheres as adjacent generator/conjugate pairs (generator on the slice of i)
/// repeated by half the spherical multiplicity.  Throws on unclassified records.
std::vector<Quaternion> zero_sequence(const std::vector<ZeroRecord>& records);

/// sum (1 - |a_n|); finite iff the sequence admits a convergent product.
double blaschke_condition(const std::vector<Quaternion>& seq);

/// (1 - q conj(a))^{-*} * (a - q) * conj(a)/|a| truncated at `truncation`;
/// the zero at the origin gives q itself.  Requires |a| < 1.
RegularSeries blaschke_factor(const Quaternion& a, std::size_t truncation);

/// Symmetrized factor vanishing on the sphere x + yS, as the real-coefficient
/// quotient ((q-x)^2 + y^2) / ((x^2+y^2) q^2 - 2xq + 1).  Requires x^2+y^2 < 1.
RegularSeries spherical_blaschke_factor(double x, double y, std::size_t truncation);

struct BlaschkeFactorSpec {
    bool spherical = false;
    Quaternion center;  // factor centre; generator of the sphere when spherical
    int power = 1;
};

struct BlaschkeProduct {
    std::vector<BlaschkeFactorSpec> factors;
    RegularSeries series;  // materialized truncated star product
    std::size_t truncation = 0;
};

/// Star product of the factors named by the sequence, left to right, without
/// any zero-preserving correction.
BlaschkeProduct finite_blaschke(const std::vector<Quaternion>& targets, std::size_t truncation);

/// Product vanishing at every prescribed target: each point factor's centre
/// is the target conjugated through the value of the partial product, spheres
/// and real points enter unchanged.  Distinct point targets on one sphere
/// collapse the product to a spherical zero there.  Rejects targets outside
/// the open unit ball, sphere targets that follow a point target on the same
/// sphere (no defined interleaving), and targets where the partial product
/// already vanishes.
BlaschkeProduct prescribed_zero_blaschke(const std::vector<Quaternion>& targets,
                                         std::size_t truncation);

/// Materializes a factor list into a truncated series (used by factorization).
RegularSeries materialize_product(const std::vector<BlaschkeFactorSpec>& factors,
                                  std::size_t truncation);

}  // namespace qhardy

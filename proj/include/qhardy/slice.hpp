#pragma once

#include <complex>
#include <vector>

#include "qhardy/quaternion.hpp"
#include "qhardy/series.hpp"

namespace qhardy {

/// Coefficientwise splitting f = F + G * J with F, G valued in the slice of I.
/// F and G are stored as complex numbers with respect to the basis {1, I}.
struct SliceSplitting {
    ImaginaryUnit I;
    ImaginaryUnit J;
    std::vector<std::complex<double>> F;
    std::vector<std::complex<double>> G;
};

/// Requires J orthogonal to I.
SliceSplitting split(const RegularSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

/// Inverse of split: coefficients a_n = F_n + G_n * J.
RegularSeries extend(const std::vector<std::complex<double>>& F,
                     const std::vector<std::complex<double>>& G,
                     const ImaginaryUnit& I, const ImaginaryUnit& J);

/// Deterministic unit orthogonal to I.
ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I);

/// Complex number alpha + beta*i representing a = alpha + beta*I; throws when
/// a does not lie in span{1, I} within tol * (1 + |a|).
std::complex<double> project_to_slice(const Quaternion& a, const ImaginaryUnit& I,
                                      double tol = 1e-9);

Quaternion from_slice(const std::complex<double>& z, const ImaginaryUnit& I);

/// Value of f at x + yJ computed from the values on the slice of I:
/// (f(x+yI) + f(x-yI))/2 + J I (f(x-yI) - f(x+yI))/2.
Quaternion representation_eval(const RegularSeries& f, double x, double y,
                               const ImaginaryUnit& I, const ImaginaryUnit& J);

/// Restriction of f to the sphere x + yS as the affine map J -> b + Jc.
struct SphereAffineForm {
    double x;
    double y;
    Quaternion b;
    Quaternion c;

    Quaternion at(const ImaginaryUnit& J) const { return b + J.q() * c; }
};

/// Computed from the two evaluations on the slice of i.
SphereAffineForm sphere_affine(const RegularSeries& f, double x, double y);

/// T_f(q) = f^c(q)^{-1} q f^c(q); real q maps to itself.  Requires
/// |f^s(q)| above tol relative to coefficient scale.
Quaternion conjugation_map(const RegularSeries& f, const Quaternion& q, double tol = 1e-12);

struct SphereExtremes {
    double max;
    double min;
    ImaginaryUnit arg_max;
    ImaginaryUnit arg_min;
};

/// Exact extremes of |f| over the sphere x + yS:
/// |b + Jc|^2 = |b|^2 + |c|^2 - 2 <vec(c conj(b)), J>.
SphereExtremes sphere_max_min_modulus(const RegularSeries& f, double x, double y);

}  // namespace qhardy

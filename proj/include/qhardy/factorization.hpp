#pragma once

#include <cstddef>
#include <string>

#include "qhardy/hardy.hpp"
#include "qhardy/quaternion.hpp"
#include "qhardy/series.hpp"
#include "qhardy/zeros.hpp"

namespace qhardy {

/// f = h * g with h nonvanishing on the open ball and g a Blaschke product
/// carrying the interior zeros of f.  Zeros on or outside the boundary sphere
/// stay in h (they do not obstruct interior nonvanishing).
struct ZeroExtraction {
    RegularSeries h;
    BlaschkeProduct g;
    /// Max coefficient error of star_mul(h, g.series) vs f, relative to the
    /// largest coefficient of f.
    double residual = 0.0;
    /// Largest remainder left by the exact spherical divisions (diagnostic).
    double division_residual = 0.0;
};

ZeroExtraction extract_zeros(const RegularSeries& f, std::size_t truncation,
                             const ZeroFindOptions& opt = {});

/// Outer factor of a function with coefficients in the slice of I, through
/// the exponential of the Herglotz integral of log of the boundary modulus.
/// The series is recovered from values on the circle of radius 0.9 and is
/// normalized by E(0) > 0 real.  Throws when some coefficient leaves the
/// slice or when too many boundary nodes sit on zeros of the trace.
RegularSeries outer_factor_on_slice(const RegularSeries& f, const ImaginaryUnit& I,
                                    std::size_t truncation, const QuadratureSpec& spec = {});

struct FactorCertificates {
    double inner_interior_max = 0.0;       // max |Inner| over interior samples
    double inner_boundary_dev = 0.0;       // max ||Inner~| - 1| at boundary nodes
    double outer_domination_min = 0.0;     // min (|E| - |f|) over interior samples
    double boundary_modulus_dev = 0.0;     // max ||E~| - |f~|| at boundary nodes
    double norm_ratio_dev = 0.0;           // | ||E||_2 / ||f||_2 - 1 |
    double reconstruction_residual = 0.0;  // star_mul(E, Inner) vs f
    double inner_split_residual = 0.0;     // star_mul(S, B) vs Inner

    bool pass() const {
        return inner_interior_max <= 1.0 + 1e-6 && inner_boundary_dev <= 1e-5 &&
               outer_domination_min >= -1e-8 && boundary_modulus_dev <= 1e-5 &&
               norm_ratio_dev <= 1e-5 && reconstruction_residual <= 1e-6 &&
               inner_split_residual <= 1e-6;
    }
};

/// f = E * Inner with E outer (coefficients in L_I) and Inner inner;
/// Inner = S * B with S nonvanishing and B the Blaschke part.
struct OuterInnerSplit {
    RegularSeries E;
    RegularSeries Inner;
    RegularSeries S;
    BlaschkeProduct B;
    FactorCertificates certificates;
};

OuterInnerSplit outer_inner_split(const RegularSeries& f, const ImaginaryUnit& I,
                                  std::size_t truncation, const QuadratureSpec& spec = {});

/// Sufficient outer test: f nonvanishing on the ball and f^{-*} of finite
/// Hardy norm at the conjugate exponent.  Diagnostic only; never throws on
/// a failing candidate.
struct OuterCertificateReport {
    bool pass = false;
    bool nonvanishing = false;
    bool inverse_norm_finite = false;
    double interior_min_modulus = 0.0;
    double inverse_norm = 0.0;
    double conjugate_exponent = 0.0;
    std::string detail;
};

OuterCertificateReport outer_certificate(const RegularSeries& f, double p,
                                         std::size_t truncation,
                                         const QuadratureSpec& spec = {});

}  // namespace qhardy

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhardy/quaternion.hpp"

namespace qhardy {

struct EvalResult {
    Quaternion value;
    /// Geometric bound on the dropped tail: |a_N| |q|^N / (1 - |q|); infinite
    /// for |q| >= 1.
    double tail_bound;
};

struct SlicePreservationInfo {
    /// True when every coefficient is real (the function preserves all slices).
    bool preserves_all_slices = false;
    /// Unit I with coefficients in span{1, I}, canonicalized so the first
    /// nonzero vector component is positive; empty when no single slice works
    /// or when all coefficients are real.
    std::optional<ImaginaryUnit> preserved_slice;
    /// Largest off-span residual relative to 1 + |a_n|.
    double residual = 0.0;
};

/// Power series sum q^n a_n with right quaternion coefficients, truncated to a
/// polynomial.  Coefficient index == power of q.
class RegularSeries {
public:
    RegularSeries() : coeffs_(1) {}
    explicit RegularSeries(std::vector<Quaternion> coeffs);

    static RegularSeries constant(const Quaternion& c) { return RegularSeries({c}); }
    /// f(q) = q.
    static RegularSeries identity() { return RegularSeries({{}, Quaternion::real(1.0)}); }
    static RegularSeries monomial(std::size_t n, const Quaternion& a);
    static RegularSeries from_real(const std::vector<double>& c);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    Quaternion coeff(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : Quaternion{};
    }

    Quaternion eval(const Quaternion& q) const;
    EvalResult eval_checked(const Quaternion& q) const;

    RegularSeries truncated(std::size_t max_degree) const;
    /// Drops trailing coefficients with |a_n| <= tol * max|a_k|.
    RegularSeries trimmed(double rel_tol = 0.0) const;

    bool has_real_coeffs(double tol = kRealTol) const;
    double max_coeff_norm() const;
    bool is_zero(double rel_tol = 0.0) const;

    /// Coefficientwise right multiplication f(q) * c.
    RegularSeries right_scaled(const Quaternion& c) const;
    /// q^k f(q).
    RegularSeries shifted_up(std::size_t k) const;

    RegularSeries& operator+=(const RegularSeries& r);
    RegularSeries& operator-=(const RegularSeries& r);
    RegularSeries operator-() const;

private:
    std::vector<Quaternion> coeffs_;
};

RegularSeries operator+(RegularSeries a, const RegularSeries& b);
RegularSeries operator-(RegularSeries a, const RegularSeries& b);
RegularSeries operator*(RegularSeries a, double s);

/// Coefficient convolution c_n = sum_k a_k b_{n-k}; agrees with pointwise
/// products exactly when the left factor preserves slices.
RegularSeries star_mul(const RegularSeries& f, const RegularSeries& g);

/// Star power f^{*p}, p >= 0.
RegularSeries star_pow(const RegularSeries& f, std::size_t p, std::size_t max_degree);

/// Coefficientwise conjugation f^c.
RegularSeries regular_conjugate(const RegularSeries& f);

/// f^s = f * f^c; coefficients are real up to roundoff.
RegularSeries symmetrization(const RegularSeries& f);

/// f^{-*} = (f^s)^{-1} * f^c truncated at out_degree; requires |a_0| >= kOriginTol.
RegularSeries star_inverse(const RegularSeries& f, std::size_t out_degree);

SlicePreservationInfo slice_preservation(const RegularSeries& f);

/// Real parts of the coefficients; throws if any imaginary part exceeds
/// tol * (1 + max|a_n|).
std::vector<double> real_coeffs(const RegularSeries& f, double tol = 1e-9);

/// Reciprocal of a real power series (c_0 != 0) truncated at out_degree.
std::vector<double> real_reciprocal(const std::vector<double>& c, std::size_t out_degree);

struct RealDivisionResult {
    RegularSeries quotient;
    /// Max remainder coefficient modulus (exact division leaves roundoff only).
    double remainder;
};

/// Divides f by a real polynomial d (d.back() != 0) of degree <= deg f.
RealDivisionResult divide_by_real_poly(const RegularSeries& f, const std::vector<double>& d);

}  // namespace qhardy

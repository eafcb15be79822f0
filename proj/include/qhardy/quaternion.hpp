#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qhardy {

/// Component tolerance for "is real" / "lies on the unit imaginary sphere" tests.
inline constexpr double kRealTol = 1e-12;

/// |a0| threshold below which a power series cannot be inverted at the origin.
inline constexpr double kOriginTol = 1e-6;

/// |q| threshold below which inversion is treated as division by zero.
inline constexpr double kZeroDivTol = 1e-14;

/// Quaternion over doubles, Hamilton convention (ij = k).
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
    constexpr double real_part() const { return w; }
    constexpr Quaternion vec() const { return {0.0, x, y, z}; }

    bool is_real(double tol = kRealTol) const {
        return std::abs(x) <= tol && std::abs(y) <= tol && std::abs(z) <= tol;
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    Quaternion inverse() const {
        const double n2 = norm_sq();
        if (std::sqrt(n2) < kZeroDivTol)
            throw std::domain_error("quaternion inverse: modulus below tolerance");
        return {w / n2, -x / n2, -y / n2, -z / n2};
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

/// Euclidean inner product of the underlying 4-vectors.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Point of the 2-sphere of imaginary units S = {q : q^2 = -1}.
/// Invariants: zero real part, unit modulus.
class ImaginaryUnit {
public:
    /// Accepts a quaternion with negligible real part and normalizes it.
    explicit ImaginaryUnit(const Quaternion& v) {
        const double vn = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
        if (vn < kZeroDivTol)
            throw std::invalid_argument("imaginary unit: zero vector part");
        if (std::abs(v.w) > 1e-9 * (vn + std::abs(v.w)))
            throw std::invalid_argument("imaginary unit: nonzero real part");
        u_ = Quaternion{0.0, v.x / vn, v.y / vn, v.z / vn};
    }

    static ImaginaryUnit from_vector(double x, double y, double z) {
        return ImaginaryUnit(Quaternion{0.0, x, y, z});
    }
    static ImaginaryUnit i() { return from_vector(1.0, 0.0, 0.0); }
    static ImaginaryUnit j() { return from_vector(0.0, 1.0, 0.0); }
    static ImaginaryUnit k() { return from_vector(0.0, 0.0, 1.0); }

    const Quaternion& q() const { return u_; }
    ImaginaryUnit operator-() const { return ImaginaryUnit(-u_); }

private:
    Quaternion u_;
};

/// q = x + y*unit with y >= 0; purely real q gets y = 0 and unit = i.
struct SliceCoordinates {
    double x;
    double y;
    ImaginaryUnit unit;

    Quaternion point() const { return Quaternion::real(x) + unit.q() * y; }
};

SliceCoordinates slice_decompose(const Quaternion& q);

/// cos(theta) + I sin(theta).
Quaternion exp_on_slice(const ImaginaryUnit& I, double theta);

/// Deterministic low-discrepancy sample of S.  n = 1 gives {i}; for n >= 6 the
/// first six entries are +-i, +-j, +-k; the rest follow a golden-angle spiral
/// whose phase is offset by `seed`.
std::vector<ImaginaryUnit> sample_unit_sphere(std::size_t n, std::uint64_t seed = 0);

}  // namespace qhardy

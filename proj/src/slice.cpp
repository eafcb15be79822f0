#include "qhardy/slice.hpp"

#include <cmath>
#include <stdexcept>

namespace qhardy {

namespace {

void check_orthogonal(const ImaginaryUnit& I, const ImaginaryUnit& J) {
    if (std::abs(dot(I.q(), J.q())) > 1e-10)
        throw std::invalid_argument("slice splitting: J must be orthogonal to I");
}

}  // namespace

SliceSplitting split(const RegularSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    check_orthogonal(I, J);
    const Quaternion K = I.q() * J.q();
    SliceSplitting s{I, J, {}, {}};
    s.F.reserve(f.coeffs().size());
    s.G.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        // {1, I, J, IJ} is an orthonormal real basis of the quaternions.
        s.F.emplace_back(a.w, dot(a, I.q()));
        s.G.emplace_back(dot(a, J.q()), dot(a, K));
    }
    return s;
}

RegularSeries extend(const std::vector<std::complex<double>>& F,
                     const std::vector<std::complex<double>>& G,
                     const ImaginaryUnit& I, const ImaginaryUnit& J) {
    check_orthogonal(I, J);
    std::vector<Quaternion> coeffs(std::max(F.size(), G.size()));
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        Quaternion a;
        if (n < F.size()) a += from_slice(F[n], I);
        if (n < G.size()) a += from_slice(G[n], I) * J.q();
        coeffs[n] = a;
    }
    return RegularSeries(std::move(coeffs));
}

ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I) {
    const Quaternion u = I.q();
    // Cross with the axis least aligned with u.
    double ax = std::abs(u.x), ay = std::abs(u.y), az = std::abs(u.z);
    Quaternion e = (ax <= ay && ax <= az) ? Quaternion{0, 1, 0, 0}
                 : (ay <= az)             ? Quaternion{0, 0, 1, 0}
                                          : Quaternion{0, 0, 0, 1};
    const Quaternion v{0.0, u.y * e.z - u.z * e.y, u.z * e.x - u.x * e.z,
                       u.x * e.y - u.y * e.x};
    return ImaginaryUnit(v);
}

std::complex<double> project_to_slice(const Quaternion& a, const ImaginaryUnit& I, double tol) {
    const double re = a.w;
    const double im = dot(a, I.q());
    const Quaternion off = a - Quaternion::real(re) - I.q() * im;
    if (off.norm() > tol * (1.0 + a.norm()))
        throw std::invalid_argument("project_to_slice: value not in the slice");
    return {re, im};
}

Quaternion from_slice(const std::complex<double>& z, const ImaginaryUnit& I) {
    return Quaternion::real(z.real()) + I.q() * z.imag();
}

Quaternion representation_eval(const RegularSeries& f, double x, double y,
                               const ImaginaryUnit& I, const ImaginaryUnit& J) {
    const Quaternion fp = f.eval(Quaternion::real(x) + I.q() * y);
    const Quaternion fm = f.eval(Quaternion::real(x) - I.q() * y);
    return (fp + fm) * 0.5 + (J.q() * I.q()) * ((fm - fp) * 0.5);
}

SphereAffineForm sphere_affine(const RegularSeries& f, double x, double y) {
    const ImaginaryUnit I = ImaginaryUnit::i();
    const Quaternion fp = f.eval(Quaternion::real(x) + I.q() * y);
    const Quaternion fm = f.eval(Quaternion::real(x) - I.q() * y);
    return {x, y, (fp + fm) * 0.5, I.q() * ((fm - fp) * 0.5)};
}

Quaternion conjugation_map(const RegularSeries& f, const Quaternion& q, double tol) {
    if (q.is_real()) return q;
    const Quaternion v = regular_conjugate(f).eval(q);
    const double scale = 1.0 + f.max_coeff_norm();
    // |f^c(q)|^2 tracks |f^s| along the sphere of q; both vanish together.
    if (v.norm() * v.norm() < tol * scale * scale)
        throw std::domain_error("conjugation_map: symmetrization vanishes at q");
    return v.inverse() * q * v;
}

SphereExtremes sphere_max_min_modulus(const RegularSeries& f, double x, double y) {
    const SphereAffineForm a = sphere_affine(f, x, y);
    const double base = a.b.norm_sq() + a.c.norm_sq();
    const Quaternion w = (a.c * a.b.conj()).vec();
    const double wn = w.norm();
    ImaginaryUnit jmin = ImaginaryUnit::i(), jmax = ImaginaryUnit::i();
    if (wn > kZeroDivTol) {
        jmax = ImaginaryUnit(-w * (1.0 / wn));
        jmin = ImaginaryUnit(w * (1.0 / wn));
    }
    const double mx = std::sqrt(std::max(0.0, base + 2.0 * wn));
    const double mn = std::sqrt(std::max(0.0, base - 2.0 * wn));
    return {mx, mn, jmax, jmin};
}

}  // namespace qhardy

#include "qhardy/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qhardy {

RegularSeries::RegularSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

RegularSeries RegularSeries::monomial(std::size_t n, const Quaternion& a) {
    std::vector<Quaternion> c(n + 1);
    c[n] = a;
    return RegularSeries(std::move(c));
}

RegularSeries RegularSeries::from_real(const std::vector<double>& c) {
    std::vector<Quaternion> q(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) q[n] = Quaternion::real(c[n]);
    return RegularSeries(std::move(q));
}

Quaternion RegularSeries::eval(const Quaternion& q) const {
    // Horner with the variable on the left: a_0 + q(a_1 + q(a_2 + ...)).
    Quaternion acc = coeffs_.back();
    for (std::size_t n = coeffs_.size() - 1; n-- > 0;) acc = q * acc + coeffs_[n];
    return acc;
}

EvalResult RegularSeries::eval_checked(const Quaternion& q) const {
    const double r = q.norm();
    double tail = std::numeric_limits<double>::infinity();
    if (r < 1.0)
        tail = coeffs_.back().norm() * std::pow(r, static_cast<double>(degree())) / (1.0 - r);
    return {eval(q), tail};
}

RegularSeries RegularSeries::truncated(std::size_t max_degree) const {
    if (degree() <= max_degree) return *this;
    return RegularSeries(std::vector<Quaternion>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

RegularSeries RegularSeries::trimmed(double rel_tol) const {
    const double cut = rel_tol * max_coeff_norm();
    std::size_t last = 0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (coeffs_[n].norm() > cut) last = n;
    return RegularSeries(std::vector<Quaternion>(coeffs_.begin(), coeffs_.begin() + last + 1));
}

bool RegularSeries::has_real_coeffs(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Quaternion& a) { return a.is_real(tol * (1.0 + a.norm())); });
}

double RegularSeries::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& a : coeffs_) m = std::max(m, a.norm());
    return m;
}

bool RegularSeries::is_zero(double rel_tol) const {
    return max_coeff_norm() <= rel_tol;
}

RegularSeries RegularSeries::right_scaled(const Quaternion& c) const {
    std::vector<Quaternion> out(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out[n] = coeffs_[n] * c;
    return RegularSeries(std::move(out));
}

RegularSeries RegularSeries::shifted_up(std::size_t k) const {
    std::vector<Quaternion> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return RegularSeries(std::move(out));
}

RegularSeries& RegularSeries::operator+=(const RegularSeries& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t n = 0; n < r.coeffs_.size(); ++n) coeffs_[n] += r.coeffs_[n];
    return *this;
}

RegularSeries& RegularSeries::operator-=(const RegularSeries& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t n = 0; n < r.coeffs_.size(); ++n) coeffs_[n] -= r.coeffs_[n];
    return *this;
}

RegularSeries RegularSeries::operator-() const {
    std::vector<Quaternion> out(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out[n] = -coeffs_[n];
    return RegularSeries(std::move(out));
}

RegularSeries operator+(RegularSeries a, const RegularSeries& b) { return a += b; }
RegularSeries operator-(RegularSeries a, const RegularSeries& b) { return a -= b; }

RegularSeries operator*(RegularSeries a, double s) {
    std::vector<Quaternion> out(a.coeffs());
    for (auto& c : out) c *= s;
    return RegularSeries(std::move(out));
}

RegularSeries star_mul(const RegularSeries& f, const RegularSeries& g) {
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Quaternion> c(a.size() + b.size() - 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) c[k + l] += a[k] * b[l];
    return RegularSeries(std::move(c));
}

RegularSeries star_pow(const RegularSeries& f, std::size_t p, std::size_t max_degree) {
    RegularSeries acc = RegularSeries::constant(Quaternion::real(1.0));
    for (std::size_t i = 0; i < p; ++i) acc = star_mul(acc, f).truncated(max_degree);
    return acc;
}

RegularSeries regular_conjugate(const RegularSeries& f) {
    std::vector<Quaternion> out(f.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = f.coeffs()[n].conj();
    return RegularSeries(std::move(out));
}

RegularSeries symmetrization(const RegularSeries& f) {
    return star_mul(f, regular_conjugate(f));
}

std::vector<double> real_coeffs(const RegularSeries& f, double tol) {
    std::vector<double> out(f.coeffs().size());
    const double scale = 1.0 + f.max_coeff_norm();
    for (std::size_t n = 0; n < out.size(); ++n) {
        const Quaternion& a = f.coeffs()[n];
        if (a.vec().norm() > tol * scale)
            throw std::invalid_argument("real_coeffs: coefficient has nonreal part");
        out[n] = a.w;
    }
    return out;
}

std::vector<double> real_reciprocal(const std::vector<double>& c, std::size_t out_degree) {
    if (c.empty() || std::abs(c[0]) < kOriginTol * kOriginTol)
        throw std::domain_error("real_reciprocal: constant term below tolerance");
    std::vector<double> r(out_degree + 1);
    r[0] = 1.0 / c[0];
    for (std::size_t n = 1; n <= out_degree; ++n) {
        double s = 0.0;
        const std::size_t kmax = std::min(n, c.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) s += c[k] * r[n - k];
        r[n] = -s / c[0];
    }
    return r;
}

RegularSeries star_inverse(const RegularSeries& f, std::size_t out_degree) {
    if (f.coeff(0).norm() < kOriginTol)
        throw std::domain_error("star_inverse: |a_0| below tolerance");
    const RegularSeries fs = symmetrization(f).truncated(out_degree);
    std::vector<double> s(fs.coeffs().size());
    for (std::size_t n = 0; n < s.size(); ++n) s[n] = fs.coeffs()[n].w;
    const RegularSeries inv_s = RegularSeries::from_real(real_reciprocal(s, out_degree));
    return star_mul(inv_s, regular_conjugate(f)).truncated(out_degree);
}

SlicePreservationInfo slice_preservation(const RegularSeries& f) {
    SlicePreservationInfo info;
    // Reference direction: vector part of the coefficient with the largest one.
    Quaternion ref;
    double best = 0.0;
    for (const auto& a : f.coeffs()) {
        const double vn = a.vec().norm();
        if (vn > best) {
            best = vn;
            ref = a.vec();
        }
    }
    if (best <= kRealTol * (1.0 + f.max_coeff_norm())) {
        info.preserves_all_slices = true;
        info.residual = best;
        return info;
    }
    const Quaternion u = ref * (1.0 / best);
    double worst = 0.0;
    for (const auto& a : f.coeffs()) {
        const Quaternion v = a.vec();
        const Quaternion off = v - u * dot(v, u);
        worst = std::max(worst, off.norm() / (1.0 + a.norm()));
    }
    info.residual = worst;
    if (worst < 1e-10) {
        Quaternion canon = u;
        // Sign convention: first nonzero component positive.
        double lead = canon.x;
        if (std::abs(lead) <= kRealTol) lead = canon.y;
        if (std::abs(lead) <= kRealTol) lead = canon.z;
        if (lead < 0.0) canon = -canon;
        info.preserved_slice = ImaginaryUnit(canon);
    }
    return info;
}

RealDivisionResult divide_by_real_poly(const RegularSeries& f, const std::vector<double>& d) {
    if (d.empty() || d.back() == 0.0)
        throw std::invalid_argument("divide_by_real_poly: divisor has zero leading coefficient");
    const std::size_t dd = d.size() - 1;
    if (f.degree() < dd) return {RegularSeries(), f.max_coeff_norm()};

    std::vector<Quaternion> rem(f.coeffs());
    std::vector<Quaternion> quot(f.degree() - dd + 1);
    for (std::size_t n = rem.size(); n-- > dd;) {
        const Quaternion qc = rem[n] * (1.0 / d.back());
        quot[n - dd] = qc;
        for (std::size_t k = 0; k < d.size(); ++k) rem[n - dd + k] -= qc * d[k];
    }
    double rmax = 0.0;
    for (std::size_t n = 0; n < dd; ++n) rmax = std::max(rmax, rem[n].norm());
    return {RegularSeries(std::move(quot)), rmax};
}

}  // namespace qhardy

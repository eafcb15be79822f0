#include "qhardy/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qhardy/slice.hpp"

namespace qhardy {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kBoundaryMargin = 1e-9;

std::vector<double> sphere_poly(double x, double y) { return {x * x + y * y, -2.0 * x, 1.0}; }
std::vector<double> sphere_poly_reversed(double x, double y) {
    return {1.0, -2.0 * x, x * x + y * y};
}

double coeff_residual(const RegularSeries& got, const RegularSeries& want, std::size_t up_to) {
    double scale = std::max(want.max_coeff_norm(), 1e-300);
    double worst = 0.0;
    for (std::size_t n = 0; n <= up_to; ++n)
        worst = std::max(worst, (got.coeff(n) - want.coeff(n)).norm());
    return worst / scale;
}

std::vector<Quaternion> interior_samples(std::uint64_t seed) {
    const auto units = sample_unit_sphere(10, seed);
    const double radii[] = {0.15, 0.35, 0.55, 0.75, 0.9};
    std::vector<Quaternion> pts;
    pts.reserve(1000);
    for (const auto& u : units)
        for (double r : radii)
            for (int k = 0; k < 20; ++k)
                pts.push_back(exp_on_slice(u, 2.0 * kPi * k / 20.0 + 0.1) * r);
    return pts;
}

double coeff_two_norm(const RegularSeries& f) {
    double s = 0.0;
    for (const auto& a : f.coeffs()) s += a.norm_sq();
    return std::sqrt(s);
}

}  // namespace

ZeroExtraction extract_zeros(const RegularSeries& f_in, std::size_t truncation,
                             const ZeroFindOptions& opt) {
    const RegularSeries f = f_in.trimmed(1e-13);
    const std::vector<ZeroRecord> records = find_zeros(f, opt);

    struct SphereZero {
        double x, y;
        int half_mult;
    };
    struct PointZero {
        Quaternion a;
        int mult;
    };
    std::vector<SphereZero> spheres;
    std::vector<PointZero> points;
    for (const auto& rec : records) {
        if (!rec.inside_ball) continue;
        if (std::sqrt(rec.x * rec.x + rec.y * rec.y) >= 1.0 - kBoundaryMargin) continue;
        if (rec.kind == ZeroKind::Unclassified)
            throw std::invalid_argument("extract_zeros: unclassifiable zero in the ball");
        if (rec.kind == ZeroKind::Spherical)
            spheres.push_back({rec.x, rec.y, rec.multiplicity / 2});
        else
            points.push_back({rec.point, rec.multiplicity});
    }

    ZeroExtraction out;

    // Spherical part removed first: each spherical Blaschke factor is the
    // real rational s/s~, so dividing by it keeps the series polynomial.
    RegularSeries fb = f;
    for (const auto& sp : spheres) {
        const std::vector<double> s = sphere_poly(sp.x, sp.y);
        for (int k = 0; k < sp.half_mult; ++k) {
            const RealDivisionResult d = divide_by_real_poly(fb, s);
            out.division_residual = std::max(
                out.division_residual, d.remainder / (1.0 + fb.max_coeff_norm()));
            fb = d.quotient;
        }
    }
    for (const auto& sp : spheres) {
        const RegularSeries st = RegularSeries::from_real(sphere_poly_reversed(sp.x, sp.y));
        for (int k = 0; k < sp.half_mult; ++k) fb = star_mul(fb, st);
    }

    // Each isolated zero is completed to a sphere by a factor at the
    // conjugate point, conjugated through the value of everything to its
    // left; real zeros pass through unchanged.  Completion and spherical
    // division interleave: one completion fills the sphere, so the next
    // conjugation point must be read off the divided quotient, where the
    // remaining copies of the zero are isolated again.
    RegularSeries w = fb;
    std::vector<BlaschkeFactorSpec> completions;
    for (const auto& pt : points) {
        const SliceCoordinates sc = slice_decompose(pt.a);
        const std::vector<double> s = sphere_poly(sc.x, sc.y);
        const RegularSeries st = RegularSeries::from_real(sphere_poly_reversed(sc.x, sc.y));
        for (int k = 0; k < pt.mult; ++k) {
            Quaternion gamma = pt.a;
            if (!pt.a.is_real()) {
                const Quaternion bbar = pt.a.conj();
                const Quaternion v = w.eval(bbar);
                if (v.norm() <= 1e-12 * (1.0 + w.max_coeff_norm()))
                    throw std::domain_error(
                        "extract_zeros: partial product vanishes at a conjugate zero");
                gamma = v.inverse() * bbar * v;
            }
            completions.push_back({false, gamma, 1});
            w = star_mul(w, blaschke_factor(gamma, truncation)).truncated(truncation);
            const RealDivisionResult d = divide_by_real_poly(w, s);
            out.division_residual =
                std::max(out.division_residual, d.remainder / (1.0 + w.max_coeff_norm()));
            w = star_mul(d.quotient, st).truncated(truncation);
        }
    }
    out.h = w.truncated(truncation).trimmed(1e-14);

    out.g.truncation = truncation;
    for (const auto& sp : spheres) {
        const Quaternion gen = Quaternion::real(sp.x) + ImaginaryUnit::i().q() * sp.y;
        out.g.factors.push_back({true, gen, sp.half_mult});
    }
    // Conjugating a product reverses factor order and conjugates each centre.
    for (auto it = completions.rbegin(); it != completions.rend(); ++it)
        out.g.factors.push_back({false, it->center.conj(), it->power});
    out.g.series = materialize_product(out.g.factors, truncation);

    const RegularSeries rec = star_mul(out.h, out.g.series).truncated(truncation);
    out.residual = coeff_residual(rec, f, truncation);
    return out;
}

RegularSeries outer_factor_on_slice(const RegularSeries& f, const ImaginaryUnit& I,
                                    std::size_t truncation, const QuadratureSpec& spec) {
    spec.validate();
    const RegularSeries ft = f.trimmed(1e-14);
    if (ft.is_zero(1e-300))
        throw std::invalid_argument("outer factor: identically zero input");

    const SliceSplitting sp = split(ft, I, orthogonal_unit(I));
    double off = 0.0;
    for (const auto& g : sp.G) off = std::max(off, std::abs(g));
    if (off > 1e-9 * (1.0 + ft.max_coeff_norm()))
        throw std::invalid_argument("outer factor: coefficients leave the slice of I");
    const std::vector<std::complex<double>>& F = sp.F;

    auto horner = [&](const std::complex<double>& z) {
        std::complex<double> acc = F.back();
        for (std::size_t n = F.size() - 1; n-- > 0;) acc = z * acc + F[n];
        return acc;
    };

    std::size_t n = spec.nodes_for(ft.degree());
    if (spec.circle_nodes == 0) n = std::max<std::size_t>(n, 512);
    // Boundary log-modulus samples; a vanishing node triggers one half-step
    // mesh refinement, after which surviving zeros are dropped (the log
    // singularity is integrable).
    std::vector<std::complex<double>> zs;
    std::vector<double> us;
    for (int attempt = 0; attempt < 2; ++attempt) {
        zs.clear();
        us.clear();
        const double shift = attempt == 0 ? 0.0 : 0.5;
        bool hit_zero = false;
        for (std::size_t k = 0; k < n; ++k) {
            const std::complex<double> z =
                std::polar(1.0, 2.0 * kPi * (static_cast<double>(k) + shift) /
                                    static_cast<double>(n));
            const double m = std::abs(horner(z));
            if (m < 1e-13) {
                hit_zero = true;
                continue;
            }
            zs.push_back(z);
            us.push_back(std::log(m));
        }
        if (!hit_zero) break;
        if (attempt == 1 && zs.size() < n / 2)
            throw std::domain_error("outer factor: boundary trace vanishes on too many nodes");
        n *= 2;
    }
    if (zs.empty()) throw std::domain_error("outer factor: no usable boundary nodes");

    const auto herglotz = [&](const std::complex<double>& z) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < zs.size(); ++k) acc += us[k] * (zs[k] + z) / (zs[k] - z);
        return acc / static_cast<double>(zs.size());
    };

    // E is holomorphic past the closed disk once the zeros are factored out,
    // so Taylor coefficients come exactly (up to aliasing) from values on an
    // interior circle.
    const double rho = 0.9;
    const std::size_t m = zs.size();
    std::vector<std::complex<double>> w(m);
    for (std::size_t l = 0; l < m; ++l)
        w[l] = std::exp(herglotz(std::polar(rho, 2.0 * kPi * static_cast<double>(l) /
                                                     static_cast<double>(m))));

    const std::size_t out_deg = std::min(truncation, m / 2);
    std::vector<std::complex<double>> c(out_deg + 1);
    for (std::size_t d = 0; d <= out_deg; ++d) {
        std::complex<double> acc = 0.0;
        for (std::size_t l = 0; l < m; ++l)
            acc += w[l] * std::polar(1.0, -2.0 * kPi * static_cast<double>(d * l) /
                                              static_cast<double>(m));
        c[d] = acc / (static_cast<double>(m) * std::pow(rho, static_cast<double>(d)));
    }

    // Unimodular normalization: rotate so E(0) is a positive real.
    if (std::abs(c[0]) > kZeroDivTol) {
        const std::complex<double> phase = std::conj(c[0]) / std::abs(c[0]);
        for (auto& v : c) v *= phase;
    }

    std::vector<Quaternion> coeffs(c.size());
    for (std::size_t d = 0; d < c.size(); ++d) coeffs[d] = from_slice(c[d], I);
    return RegularSeries(std::move(coeffs)).trimmed(1e-14);
}

OuterInnerSplit outer_inner_split(const RegularSeries& f, const ImaginaryUnit& I,
                                  std::size_t truncation, const QuadratureSpec& spec) {
    OuterInnerSplit out;
    out.E = outer_factor_on_slice(f, I, truncation, spec);
    out.Inner = star_mul(star_inverse(out.E, truncation), f).truncated(truncation).trimmed(1e-13);

    const ZeroExtraction ze = extract_zeros(out.Inner, truncation);
    out.S = ze.h;
    out.B = ze.g;
    out.certificates.inner_split_residual = ze.residual;

    FactorCertificates& cert = out.certificates;
    cert.reconstruction_residual = coeff_residual(
        star_mul(out.E, out.Inner).truncated(truncation), f, truncation);

    double inner_max = 0.0;
    double domination = std::numeric_limits<double>::infinity();
    for (const auto& q : interior_samples(spec.seed)) {
        inner_max = std::max(inner_max, out.Inner.eval(q).norm());
        domination = std::min(domination, out.E.eval(q).norm() - f.eval(q).norm());
    }
    cert.inner_interior_max = inner_max;
    cert.outer_domination_min = domination;

    QuadratureSpec tspec = spec;
    if (tspec.circle_nodes == 0) tspec.circle_nodes = 512;
    const ImaginaryUnit J = orthogonal_unit(I);
    const ImaginaryUnit K(I.q() * J.q());
    double bdev = 0.0, edev = 0.0;
    for (const ImaginaryUnit& u : {I, J, K}) {
        const BoundaryTrace ti = boundary_trace(out.Inner, u, tspec);
        const BoundaryTrace te = boundary_trace(out.E, u, tspec);
        const BoundaryTrace tf = boundary_trace(f, u, tspec);
        for (std::size_t k = 0; k < ti.values.size(); ++k) {
            bdev = std::max(bdev, std::abs(ti.values[k].norm() - 1.0));
            edev = std::max(edev, std::abs(te.values[k].norm() - tf.values[k].norm()));
        }
    }
    cert.inner_boundary_dev = bdev;
    cert.boundary_modulus_dev = edev;

    const double nf = coeff_two_norm(f);
    cert.norm_ratio_dev = nf > 0.0 ? std::abs(coeff_two_norm(out.E) / nf - 1.0) : 0.0;
    return out;
}

OuterCertificateReport outer_certificate(const RegularSeries& f, double p,
                                         std::size_t truncation, const QuadratureSpec& spec) {
    if (!(p >= 1.0))
        throw std::invalid_argument("outer_certificate: exponent must satisfy p >= 1");
    OuterCertificateReport rep;
    rep.conjugate_exponent = std::isinf(p) ? 1.0 : (p == 1.0 ? std::numeric_limits<double>::infinity()
                                                             : p / (p - 1.0));
    std::ostringstream detail;

    try {
        const std::vector<ZeroRecord> recs = find_zeros(f.trimmed(1e-13));
        rep.nonvanishing = true;
        for (const auto& r : recs)
            if (r.inside_ball) {
                rep.nonvanishing = false;
                detail << "zero inside the ball near sphere (" << r.x << ", " << r.y << "); ";
                break;
            }
    } catch (const std::exception& e) {
        rep.nonvanishing = false;
        detail << "zero search: " << e.what() << "; ";
    }

    rep.interior_min_modulus = std::numeric_limits<double>::infinity();
    for (const auto& q : interior_samples(spec.seed))
        rep.interior_min_modulus = std::min(rep.interior_min_modulus, f.eval(q).norm());

    try {
        const RegularSeries finv = star_inverse(f, truncation);
        const HardyNormEstimate est = hardy_norm(finv, rep.conjugate_exponent, spec);
        rep.inverse_norm = est.value;
        rep.inverse_norm_finite = !est.divergent;
        if (est.divergent) detail << "inverse norm diverges along the radius grid; ";
    } catch (const std::exception& e) {
        rep.inverse_norm_finite = false;
        detail << "inverse: " << e.what() << "; ";
    }

    rep.pass = rep.nonvanishing && rep.inverse_norm_finite;
    rep.detail = detail.str();
    return rep;
}

}  // namespace qhardy

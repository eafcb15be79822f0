#include "qhardy/zeros.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qhardy/slice.hpp"

namespace qhardy {

namespace {

// Parlett-Reinsch balancing with power-of-two factors; Eigen's solver does
// not balance, and an unbalanced companion matrix loses interior-root
// accuracy once the coefficient range is wide.
void balance(Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    bool again = true;
    while (again) {
        again = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            while (c < 0.5 * r) {
                c *= 2.0;
                r *= 0.5;
                f *= 2.0;
            }
            while (c >= 2.0 * r) {
                c *= 0.5;
                r *= 2.0;
                f *= 0.5;
            }
            if (c + r < 0.95 * s) {
                again = true;
                for (Eigen::Index j = 0; j < n; ++j) a(i, j) /= f;
                for (Eigen::Index j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

std::vector<std::complex<double>> companion_roots(const std::vector<double>& p_in) {
    std::vector<double> p = p_in;
    const std::size_t d = p.size() - 1;
    // Substitute q = lam*z with lam the geometric mean root radius.  The raw
    // companion is badly scaled when the trailing coefficient barely clears
    // the trim threshold, and the unbalanced eigensolve then scatters
    // multiple roots far beyond the cluster radius.
    double lam = 1.0;
    if (p[0] != 0.0 && p[d] != 0.0) {
        const double cand = std::pow(std::abs(p[0] / p[d]), 1.0 / static_cast<double>(d));
        if (std::isfinite(cand) && cand > 0.0) lam = cand;
    }
    const double half = 0.5 * static_cast<double>(d);
    double norm = 0.0;
    for (std::size_t n = 0; n <= d; ++n) {
        p[n] *= std::pow(lam, static_cast<double>(n) - half);
        norm = std::max(norm, std::abs(p[n]));
    }
    for (auto& c : p) c /= norm;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d));
    for (std::size_t r = 1; r < d; ++r) m(static_cast<Eigen::Index>(r),
                                          static_cast<Eigen::Index>(r - 1)) = 1.0;
    for (std::size_t r = 0; r < d; ++r)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(d - 1)) = -p[r] / p[d];
    balance(m);
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    std::vector<std::complex<double>> roots(d);
    for (std::size_t r = 0; r < d; ++r)
        roots[r] = lam * solver.eigenvalues()[static_cast<Eigen::Index>(r)];
    return roots;
}

std::vector<double> poly_derivative(const std::vector<double>& p) {
    if (p.size() <= 1) return {0.0};
    std::vector<double> d(p.size() - 1);
    for (std::size_t n = 1; n < p.size(); ++n) d[n - 1] = p[n] * static_cast<double>(n);
    return d;
}

std::complex<double> poly_eval(const std::vector<double>& p, std::complex<double> z) {
    std::complex<double> acc = p.back();
    for (std::size_t n = p.size() - 1; n-- > 0;) acc = acc * z + p[n];
    return acc;
}

// Newton refinement on the (mult-1)-th derivative, where the clustered root
// is simple.  Falls back to the centroid if the iteration wanders.
std::complex<double> refine_root(const std::vector<double>& p, std::complex<double> z0,
                                 std::size_t mult, double trust_radius) {
    std::vector<double> g = p;
    for (std::size_t k = 1; k < mult; ++k) g = poly_derivative(g);
    const std::vector<double> dg = poly_derivative(g);
    std::complex<double> z = z0;
    for (int it = 0; it < 8; ++it) {
        const std::complex<double> den = poly_eval(dg, z);
        if (std::abs(den) == 0.0) return z0;
        const std::complex<double> step = poly_eval(g, z) / den;
        z -= step;
        if (std::abs(z - z0) > trust_radius) return z0;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    return z;
}

struct Cluster {
    std::complex<double> center;  // refined; Im >= 0 (folded to the upper half)
    std::size_t count = 0;        // total root mass: line roots once, pairs twice
    std::size_t line = 0;         // members that sat on the real axis
    bool real = false;
};

// Roots are folded to the closed upper half plane before clustering so that a
// multiple real root scattered into a mix of line roots and conjugate pairs
// still lands in one cluster.  A cluster is real only when every member came
// from the line; mixed clusters are resolved by the near-axis fallback in the
// classification stage.
std::vector<Cluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                   const std::vector<double>& p, const ZeroFindOptions& opt) {
    std::vector<Cluster> clusters;
    for (const auto& z : roots) {
        const bool on_line = std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z.real()));
        const std::complex<double> w{z.real(), on_line ? 0.0 : std::abs(z.imag())};
        bool joined = false;
        for (auto& c : clusters) {
            if (std::abs(w - c.center) <= opt.cluster_tol * (1.0 + std::abs(w))) {
                c.center = (c.center * static_cast<double>(c.count) + w) /
                           static_cast<double>(c.count + 1);
                ++c.count;
                if (on_line) ++c.line;
                joined = true;
                break;
            }
        }
        if (!joined) clusters.push_back({w, 1, on_line ? 1u : 0u, false});
    }
    for (auto& c : clusters) {
        const double trust = 64.0 * opt.cluster_tol * (1.0 + std::abs(c.center));
        c.real = c.line == c.count;
        // The root multiplicity in p: full count for a line root, half for
        // the upper representative of a conjugate-pair cluster.
        const std::size_t mult = c.real ? c.count : std::max<std::size_t>(1, c.count / 2);
        c.center = refine_root(p, c.center, mult, trust);
        if (c.real || c.center.imag() < 0.0) c.center = {c.center.real(), std::abs(c.center.imag())};
        if (c.real) c.center = {c.center.real(), 0.0};
    }
    // Merge clusters that collapsed onto the same refined location.
    std::vector<Cluster> merged;
    for (const auto& c : clusters) {
        bool joined = false;
        for (auto& m : merged) {
            if (m.real == c.real &&
                std::abs(m.center - c.center) <= opt.merge_tol * (1.0 + std::abs(c.center))) {
                m.count += c.count;
                m.line += c.line;
                joined = true;
                break;
            }
        }
        if (!joined) merged.push_back(c);
    }
    return merged;
}

double sphere_vanish_residual(const RegularSeries& f, double x, double y) {
    const SphereAffineForm a = sphere_affine(f, x, y);
    return std::max(a.b.norm(), a.c.norm());
}

}  // namespace

std::vector<ZeroRecord> find_zeros(const RegularSeries& f_in, const ZeroFindOptions& opt) {
    RegularSeries f = f_in.trimmed(1e-13);
    if (f.is_zero(0.0)) throw std::invalid_argument("find_zeros: series is identically zero");
    const double scale = f.max_coeff_norm();

    std::vector<ZeroRecord> records;

    // Zero at the origin: strip leading coefficients first so the
    // symmetrization has a nonzero constant term.
    std::size_t m0 = 0;
    while (m0 < f.degree() && f.coeff(m0).norm() <= 1e-13 * scale) ++m0;
    if (m0 > 0) {
        std::vector<Quaternion> rest(f.coeffs().begin() + static_cast<std::ptrdiff_t>(m0),
                                     f.coeffs().end());
        f = RegularSeries(std::move(rest));
        ZeroRecord r;
        r.kind = ZeroKind::Isolated;
        r.point = Quaternion{};
        r.multiplicity = static_cast<int>(m0);
        r.residual = 0.0;
        r.inside_ball = true;
        records.push_back(r);
    }
    if (f.degree() == 0) return records;

    const RegularSeries fs = symmetrization(f);
    std::vector<double> P(fs.coeffs().size());
    double pmax = 0.0;
    for (std::size_t n = 0; n < P.size(); ++n) {
        P[n] = fs.coeffs()[n].w;
        pmax = std::max(pmax, std::abs(P[n]));
    }
    std::size_t last = 0;
    for (std::size_t n = 0; n < P.size(); ++n)
        if (std::abs(P[n]) > 1e-13 * pmax) last = n;
    P.resize(last + 1);
    if (P.size() <= 1) return records;

    const auto clusters = cluster_roots(companion_roots(P), P, opt);

    const double vanish = opt.vanish_tol * (1.0 + scale);
    for (const auto& cl : clusters) {
        const double cx = cl.center.real();
        const double cy = cl.center.imag();

        if (cl.real) {
            // Real roots of the symmetrization come in even multiplicity.
            ZeroRecord r;
            r.x = cx;
            r.point = Quaternion::real(cx);
            r.inside_ball = std::abs(cx) < 1.0;
            r.residual = f.eval(r.point).norm();
            if (cl.count % 2 == 0 && r.residual <= vanish) {
                r.kind = ZeroKind::Isolated;
                r.multiplicity = static_cast<int>(cl.count / 2);
            } else {
                r.kind = ZeroKind::Unclassified;
                r.multiplicity = static_cast<int>(cl.count);
            }
            records.push_back(r);
            continue;
        }

        // Divide out the sphere polynomial while it divides exactly; each
        // exact division consumes a conjugate quadruple of the cluster mass.
        const std::vector<double> s = {cx * cx + cy * cy, -2.0 * cx, 1.0};
        RegularSeries fw = f;
        std::size_t m = 0;
        while (m < cl.count / 4) {
            const RealDivisionResult d = divide_by_real_poly(fw, s);
            if (d.remainder > 1e-7 * (1.0 + fw.max_coeff_norm())) break;
            fw = d.quotient;
            ++m;
        }
        if (m > 0) {
            ZeroRecord r;
            r.kind = ZeroKind::Spherical;
            r.x = cx;
            r.y = cy;
            r.multiplicity = static_cast<int>(2 * m);
            r.residual = sphere_vanish_residual(f, cx, cy);
            r.inside_ball = cx * cx + cy * cy < 1.0;
            records.push_back(r);
        }
        const std::size_t n_units = cl.count - 4 * m;
        if (n_units == 0) continue;

        // A cluster hugging the real axis is usually a perturbed multiple
        // real root (mixed line/pair scatter); re-refine on the line and
        // accept when f itself vanishes there.
        if (n_units % 2 == 0 && cy <= std::max(1e-6, 2.0 * opt.cluster_tol) * (1.0 + std::abs(cx))) {
            const double trust = 64.0 * opt.cluster_tol * (1.0 + std::abs(cx));
            const double xr = refine_root(P, {cx, 0.0}, cl.count, trust).real();
            const double res = f.eval(Quaternion::real(xr)).norm();
            if (res <= vanish) {
                ZeroRecord r;
                r.kind = ZeroKind::Isolated;
                r.point = Quaternion::real(xr);
                r.x = xr;
                r.y = 0.0;
                r.multiplicity = static_cast<int>(n_units / 2);
                r.residual = res;
                r.inside_ball = std::abs(xr) < 1.0;
                records.push_back(r);
                continue;
            }
        }

        const SphereAffineForm aff = sphere_affine(fw, cx, cy);
        ZeroRecord r;
        r.x = cx;
        r.y = cy;
        r.multiplicity = static_cast<int>(n_units % 2 == 0 ? n_units / 2 : n_units);
        r.inside_ball = cx * cx + cy * cy < 1.0;
        if (n_units % 2 != 0) {
            r.kind = ZeroKind::Unclassified;
            r.point = Quaternion::real(cx) + ImaginaryUnit::i().q() * cy;
            r.residual = sphere_vanish_residual(fw, cx, cy);
            records.push_back(r);
            continue;
        }
        if (aff.c.norm() <= opt.vanish_tol * (1.0 + fw.max_coeff_norm())) {
            r.kind = ZeroKind::Unclassified;
            r.point = Quaternion::real(cx) + ImaginaryUnit::i().q() * cy;
            r.residual = std::max(aff.b.norm(), aff.c.norm());
        } else {
            const Quaternion J = -(aff.b * aff.c.inverse());
            const double dev = (J * J + Quaternion::real(1.0)).norm();
            const Quaternion vecJ = J.vec();
            if (dev < opt.class_tol && vecJ.norm() > kZeroDivTol) {
                const Quaternion point =
                    Quaternion::real(cx) + vecJ * (cy / vecJ.norm());
                r.point = point;
                r.residual = f.eval(point).norm();
                r.kind = r.residual <= vanish ? ZeroKind::Isolated : ZeroKind::Unclassified;
            } else {
                r.kind = ZeroKind::Unclassified;
                r.point = Quaternion::real(cx) + ImaginaryUnit::i().q() * cy;
                r.residual = dev;
            }
        }
        records.push_back(r);
    }

    // Coalesce records of the same locus that arrived through separate
    // clusters (scattered multiple roots straddling the cluster radius).
    {
        std::vector<ZeroRecord> dedup;
        const double join = std::max(opt.cluster_tol, 10.0 * opt.merge_tol);
        for (const auto& r : records) {
            bool joined = false;
            if (r.kind != ZeroKind::Unclassified) {
                for (auto& o : dedup) {
                    if (o.kind != r.kind) continue;
                    const bool same =
                        r.kind == ZeroKind::Isolated
                            ? (o.point - r.point).norm() <= join * (1.0 + r.point.norm())
                            : std::abs(o.x - r.x) + std::abs(o.y - r.y) <=
                                  join * (1.0 + std::sqrt(r.x * r.x + r.y * r.y));
                    if (same) {
                        o.multiplicity += r.multiplicity;
                        o.residual = std::max(o.residual, r.residual);
                        joined = true;
                        break;
                    }
                }
            }
            if (!joined) dedup.push_back(r);
        }
        records = std::move(dedup);
    }

    if (std::isfinite(opt.max_radius)) {
        std::erase_if(records, [&](const ZeroRecord& r) {
            return std::sqrt(r.x * r.x + r.y * r.y) >= opt.max_radius;
        });
    }
    std::sort(records.begin(), records.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        const double na = a.x * a.x + a.y * a.y, nb = b.x * b.x + b.y * b.y;
        if (na != nb) return na < nb;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    return records;
}

std::vector<Quaternion> zero_sequence(const std::vector<ZeroRecord>& records) {
    std::vector<Quaternion> seq;
    for (const auto& r : records) {
        if (r.kind == ZeroKind::Unclassified)
            throw std::invalid_argument("zero_sequence: unclassified zero record");
        if (r.kind == ZeroKind::Isolated) {
            for (int k = 0; k < r.multiplicity; ++k) seq.push_back(r.point);
        } else {
            const Quaternion gen = Quaternion::real(r.x) + ImaginaryUnit::i().q() * r.y;
            for (int k = 0; k < r.multiplicity / 2; ++k) {
                seq.push_back(gen);
                seq.push_back(gen.conj());
            }
        }
    }
    return seq;
}

double blaschke_condition(const std::vector<Quaternion>& seq) {
    double s = 0.0;
    for (const auto& a : seq) s += 1.0 - a.norm();
    return s;
}

RegularSeries blaschke_factor(const Quaternion& a, std::size_t truncation) {
    const double r = a.norm();
    if (r >= 1.0 - 1e-9)
        throw std::invalid_argument("blaschke_factor: centre not strictly inside the unit ball");
    if (r < kZeroDivTol) return RegularSeries::identity();
    const RegularSeries denom({Quaternion::real(1.0), -a.conj()});
    const RegularSeries num({a, Quaternion::real(-1.0)});
    return star_mul(star_inverse(denom, truncation), num)
        .truncated(truncation)
        .right_scaled(a.conj() * (1.0 / r));
}

RegularSeries spherical_blaschke_factor(double x, double y, std::size_t truncation) {
    const double r2 = x * x + y * y;
    if (r2 >= (1.0 - 1e-9) * (1.0 - 1e-9))
        throw std::invalid_argument("spherical_blaschke_factor: sphere not inside the unit ball");
    if (r2 < kZeroDivTol) return RegularSeries::monomial(2, Quaternion::real(1.0));
    const std::vector<double> s = {r2, -2.0 * x, 1.0};
    const std::vector<double> st = {1.0, -2.0 * x, r2};
    const std::vector<double> inv = real_reciprocal(st, truncation);
    std::vector<double> prod(std::min(truncation + 1, inv.size() + 2), 0.0);
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t l = 0; l < inv.size() && k + l < prod.size(); ++l)
            prod[k + l] += s[k] * inv[l];
    return RegularSeries::from_real(prod);
}

namespace {

struct ZeroGroup {
    bool spherical = false;
    Quaternion a;
    int count = 1;
};

std::vector<ZeroGroup> group_targets(const std::vector<Quaternion>& seq) {
    std::vector<ZeroGroup> groups;
    const auto same = [](const Quaternion& p, const Quaternion& q) {
        return (p - q).norm() <= 1e-12 * (1.0 + p.norm());
    };
    std::size_t i = 0;
    while (i < seq.size()) {
        const Quaternion a = seq[i];
        const bool nonreal = a.vec().norm() > kRealTol * (1.0 + a.norm());
        if (nonreal && i + 1 < seq.size() && same(seq[i + 1], a.conj())) {
            int m = 0;
            while (i + 1 < seq.size() && same(seq[i], a) && same(seq[i + 1], a.conj())) {
                ++m;
                i += 2;
            }
            groups.push_back({true, a, m});
        } else {
            int p = 0;
            while (i < seq.size() && same(seq[i], a)) {
                ++p;
                ++i;
            }
            groups.push_back({false, a, p});
        }
    }
    return groups;
}

void check_targets_inside(const std::vector<Quaternion>& seq) {
    for (const auto& a : seq)
        if (a.norm() >= 1.0 - 1e-9)
            throw std::invalid_argument("blaschke targets must lie strictly inside the unit ball");
}

}  // namespace

RegularSeries materialize_product(const std::vector<BlaschkeFactorSpec>& factors,
                                  std::size_t truncation) {
    RegularSeries acc = RegularSeries::constant(Quaternion::real(1.0));
    for (const auto& fac : factors) {
        const SliceCoordinates sc = slice_decompose(fac.center);
        const RegularSeries base = fac.spherical
                                       ? spherical_blaschke_factor(sc.x, sc.y, truncation)
                                       : blaschke_factor(fac.center, truncation);
        acc = star_mul(acc, star_pow(base, static_cast<std::size_t>(fac.power), truncation))
                  .truncated(truncation);
    }
    return acc;
}

BlaschkeProduct finite_blaschke(const std::vector<Quaternion>& targets, std::size_t truncation) {
    if (targets.empty()) throw std::invalid_argument("finite_blaschke: empty target list");
    check_targets_inside(targets);
    BlaschkeProduct out;
    out.truncation = truncation;
    for (const auto& g : group_targets(targets))
        out.factors.push_back({g.spherical, g.a, g.count});
    out.series = materialize_product(out.factors, truncation);
    return out;
}

BlaschkeProduct prescribed_zero_blaschke(const std::vector<Quaternion>& targets,
                                         std::size_t truncation) {
    if (targets.empty())
        throw std::invalid_argument("prescribed_zero_blaschke: empty target list");
    check_targets_inside(targets);
    const std::vector<ZeroGroup> groups = group_targets(targets);

    BlaschkeProduct out;
    out.truncation = truncation;
    RegularSeries partial = RegularSeries::constant(Quaternion::real(1.0));
    std::vector<std::pair<double, double>> isolated_spheres;
    for (const auto& g : groups) {
        BlaschkeFactorSpec spec{g.spherical, g.a, g.count};
        const SliceCoordinates ga = slice_decompose(g.a);
        if (g.spherical) {
            // A sphere listed after one of its own points has no defined
            // interleaving in the construction; reject rather than guess.
            for (const auto& [sx, sy] : isolated_spheres)
                if (std::abs(sx - ga.x) <= 1e-9 && std::abs(sy - ga.y) <= 1e-9)
                    throw std::invalid_argument(
                        "prescribed_zero_blaschke: sphere target follows an isolated "
                        "target on the same sphere");
        } else if (!g.a.is_real()) {
            const Quaternion v = partial.eval(g.a);
            if (v.norm() <= 1e-10 * (1.0 + partial.max_coeff_norm()))
                throw std::domain_error(
                    "prescribed_zero_blaschke: partial product already vanishes at a "
                    "target; the construction is undefined there");
            spec.center = v.inverse() * g.a * v;
            isolated_spheres.emplace_back(ga.x, ga.y);
        }
        const SliceCoordinates sc = slice_decompose(spec.center);
        const RegularSeries base = spec.spherical
                                       ? spherical_blaschke_factor(sc.x, sc.y, truncation)
                                       : blaschke_factor(spec.center, truncation);
        partial = star_mul(partial, star_pow(base, static_cast<std::size_t>(spec.power), truncation))
                      .truncated(truncation);
        out.factors.push_back(spec);
    }
    out.series = partial;
    return out;
}

}  // namespace qhardy

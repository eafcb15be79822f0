#include "qhardy/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qhardy {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Divergence heuristic thresholds: means at the last three grid radii must
// all grow by more than this ratio, with accelerating slope, before a series
// is flagged as not in H^p at its truncation.
constexpr double kDivergenceLogSlope = 20.0;

const std::vector<double>& default_r_grid() {
    static const std::vector<double> grid = {
        0.05, 0.10, 0.20, 0.30, 0.40,  0.50,  0.60,  0.70,  0.80,  0.85,
        0.90, 0.925, 0.95, 0.97, 0.98, 0.985, 0.99, 0.993, 0.997, 0.999};
    return grid;
}

// Evaluation of f on one slice through the splitting f = F + G J with F, G
// holomorphic on the disk; |f|^2 = |F|^2 + |G|^2.
struct SliceEvaluator {
    std::vector<std::complex<double>> F, G;
    ImaginaryUnit I;
    ImaginaryUnit J;

    SliceEvaluator(const RegularSeries& f, const ImaginaryUnit& unit)
        : I(unit), J(orthogonal_unit(unit)) {
        SliceSplitting s = split(f, I, J);
        F = std::move(s.F);
        G = std::move(s.G);
    }

    static std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                       const std::complex<double>& z) {
        std::complex<double> acc = c.back();
        for (std::size_t n = c.size() - 1; n-- > 0;) acc = z * acc + c[n];
        return acc;
    }

    double abs_sq(const std::complex<double>& z) const {
        return std::norm(horner(F, z)) + std::norm(horner(G, z));
    }

    Quaternion value(const std::complex<double>& z) const {
        return from_slice(horner(F, z), I) + from_slice(horner(G, z), I) * J.q();
    }
};

double power_mean(const SliceEvaluator& ev, double r, double p, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        const double a2 = ev.abs_sq(std::polar(r, theta));
        acc += (p == 2.0) ? a2 : std::pow(a2, 0.5 * p);
    }
    return std::pow(acc / static_cast<double>(n), 1.0 / p);
}

// Means that still climb steeply at the end of the grid mark a truncation of
// a series whose norm diverges at the boundary.  A logarithmic slope above
// kDivergenceLogSlope sustained over the last two steps separates those from
// polynomial tails of modest degree, which flatten out (slope <= degree).
bool growing_without_plateau(const std::vector<double>& means, const std::vector<double>& radii) {
    const std::size_t n = means.size();
    if (n < 3) return false;
    const double m1 = means[n - 3], m2 = means[n - 2], m3 = means[n - 1];
    if (m1 <= 0.0 || m2 <= 0.0 || m3 <= 0.0) return false;
    const double rate2 = std::log(m2 / m1) / (radii[n - 2] - radii[n - 3]);
    const double rate3 = std::log(m3 / m2) / (radii[n - 1] - radii[n - 2]);
    return std::min(rate2, rate3) > kDivergenceLogSlope;
}

double geometric_tail_bound(const RegularSeries& f, double r) {
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return f.coeffs().back().norm() * std::pow(r, static_cast<double>(f.degree())) / (1.0 - r);
}

struct SphereScan {
    double value = 0.0;
    double r = 0.0;
    double x = 0.0, y = 0.0;
    Quaternion arg_dir{0.0, 1.0, 0.0, 0.0};
};

// Largest |f| over the spheres x = r cos(phi), y = r sin(phi), phi in [0, pi],
// using the exact affine extremes on each sphere.
SphereScan sup_on_radius(const SliceEvaluator& ev, double r, std::size_t nphi) {
    SphereScan best;
    best.r = r;
    const Quaternion iq = ImaginaryUnit::i().q();
    for (std::size_t m = 0; m <= nphi; ++m) {
        const double phi = kPi * static_cast<double>(m) / static_cast<double>(nphi);
        const std::complex<double> z = std::polar(r, phi);
        const Quaternion vp = ev.value(z);
        const Quaternion vm = ev.value(std::conj(z));
        const Quaternion b = (vp + vm) * 0.5;
        const Quaternion c = iq * ((vm - vp) * 0.5);
        const Quaternion w = (c * b.conj()).vec();
        const double wn = w.norm();
        const double mx = std::sqrt(std::max(0.0, b.norm_sq() + c.norm_sq() + 2.0 * wn));
        if (mx > best.value) {
            best.value = mx;
            best.x = z.real();
            best.y = z.imag();
            best.arg_dir = (wn > kZeroDivTol) ? -w * (1.0 / wn) : iq;
        }
    }
    return best;
}

}  // namespace

std::size_t QuadratureSpec::nodes_for(std::size_t degree) const {
    if (circle_nodes != 0) return circle_nodes;
    const std::size_t need = std::max<std::size_t>(64, 2 * degree + 1);
    std::size_t n = 64;
    while (n < need) n <<= 1;
    return n;
}

std::vector<double> QuadratureSpec::radii() const {
    return r_grid.empty() ? default_r_grid() : r_grid;
}

void QuadratureSpec::validate() const {
    const std::vector<double> r = radii();
    if (r.empty()) throw std::invalid_argument("quadrature: empty r_grid");
    double prev = 0.0;
    for (double v : r) {
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument("quadrature: r_grid values must lie in (0, 1)");
        if (v <= prev && prev != 0.0)
            throw std::invalid_argument("quadrature: r_grid must be strictly increasing");
        prev = v;
    }
    if (unit_samples == 0) throw std::invalid_argument("quadrature: unit_samples must be positive");
}

double circle_mean(const RegularSeries& f, const ImaginaryUnit& I, double r, double p,
                   const QuadratureSpec& spec) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("circle_mean: p must be finite and positive");
    if (!(r >= 0.0)) throw std::invalid_argument("circle_mean: negative radius");
    const SliceEvaluator ev(f, I);
    return power_mean(ev, r, p, spec.nodes_for(f.degree()));
}

SliceNormResult slice_norm(const RegularSeries& f, const ImaginaryUnit& I, double p,
                           const QuadratureSpec& spec) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("slice_norm: p must be finite and positive");
    spec.validate();
    const std::vector<double> radii = spec.radii();
    const std::size_t n = spec.nodes_for(f.degree());
    const SliceEvaluator ev(f, I);

    SliceNormResult out;
    out.means.reserve(radii.size());
    for (double r : radii) out.means.push_back(power_mean(ev, r, p, n));
    out.divergent = growing_without_plateau(out.means, radii);
    out.tail_bound = geometric_tail_bound(f, radii.back());
    if (out.divergent) {
        out.value = out.means.back();
        out.r_used = radii.back();
    } else {
        out.value = std::max(power_mean(ev, 1.0, p, n), out.means.back());
        out.r_used = 1.0;
    }
    return out;
}

HardyNormEstimate hardy_norm(const RegularSeries& f, double p, const QuadratureSpec& spec) {
    if (!(p > 0.0)) throw std::invalid_argument("hardy_norm: p must be positive");
    spec.validate();
    HardyNormEstimate est;
    est.p = p;

    if (std::isinf(p)) {
        const std::vector<double> radii = spec.radii();
        const std::size_t nphi = spec.nodes_for(f.degree()) / 2;
        const SliceEvaluator ev(f, ImaginaryUnit::i());
        std::vector<double> sups;
        sups.reserve(radii.size());
        SphereScan best;
        for (double r : radii) {
            const SphereScan s = sup_on_radius(ev, r, nphi);
            sups.push_back(s.value);
            if (s.value >= best.value) best = s;
        }
        est.divergent = growing_without_plateau(sups, radii);
        est.truncation_error_bound = geometric_tail_bound(f, radii.back());
        if (est.divergent) {
            est.value = sups.back();
            est.r_used = radii.back();
        } else {
            const SphereScan sb = sup_on_radius(ev, 1.0, nphi);
            best = (sb.value >= best.value) ? sb : best;
            est.value = std::max(best.value, sups.back());
            est.r_used = 1.0;
        }
        est.achieved_unit = ImaginaryUnit(best.arg_dir);
        return est;
    }

    const auto units = sample_unit_sphere(spec.unit_samples, spec.seed);
    bool any_divergent = false;
    double bestv = -1.0;
    for (const auto& u : units) {
        const SliceNormResult s = slice_norm(f, u, p, spec);
        any_divergent = any_divergent || s.divergent;
        if (s.value > bestv) {
            bestv = s.value;
            est.value = s.value;
            est.achieved_unit = u;
            est.r_used = s.r_used;
            est.truncation_error_bound = s.tail_bound;
        }
    }
    est.divergent = any_divergent;
    return est;
}

double three_sphere_mean(const RegularSeries& f, double r, double p, const QuadratureSpec& spec) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("three_sphere_mean: p must be finite and positive");
    spec.validate();
    const std::size_t n = spec.nodes_for(f.degree());

    // Hypersurface measure on the sphere of radius r: with q = r e^{I theta},
    // d sigma = r^3 sin^2(theta) d theta d sigma_S(I), and running theta over
    // the full circle covers the 3-sphere twice.
    std::vector<ImaginaryUnit> units;
    if (slice_preservation(f).preserves_all_slices)
        units.push_back(ImaginaryUnit::i());
    else
        units = sample_unit_sphere(spec.unit_samples, spec.seed);

    double acc = 0.0;
    for (const auto& u : units) {
        const SliceEvaluator ev(f, u);
        for (std::size_t k = 0; k < n; ++k) {
            const double theta = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
            const double s = std::sin(theta);
            const double a2 = ev.abs_sq(std::polar(r, theta));
            acc += s * s * ((p == 2.0) ? a2 : std::pow(a2, 0.5 * p));
        }
    }
    const double mean =
        2.0 * acc / (static_cast<double>(n) * static_cast<double>(units.size()));
    return std::pow(mean, 1.0 / p);
}

double three_sphere_norm(const RegularSeries& f, double p, const QuadratureSpec& spec) {
    spec.validate();
    double best = 0.0;
    for (double r : spec.radii()) best = std::max(best, three_sphere_mean(f, r, p, spec));
    return std::max(best, three_sphere_mean(f, 1.0, p, spec));
}

BoundaryTrace boundary_trace(const RegularSeries& f, const ImaginaryUnit& I,
                             const QuadratureSpec& spec) {
    spec.validate();
    const std::vector<double> radii = spec.radii();
    const std::size_t n = spec.nodes_for(f.degree());
    const SliceEvaluator ev(f, I);

    BoundaryTrace t;
    t.unit = I;
    t.thetas.resize(n);
    t.values.resize(n);
    t.node_ok.resize(n);
    const double rlast = radii.back();
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        const Quaternion vb = ev.value(std::polar(1.0, theta));
        const Quaternion vr = ev.value(std::polar(rlast, theta));
        t.thetas[k] = theta;
        t.values[k] = vb;
        t.node_ok[k] = (vb - vr).norm() <= spec.trace_tol * (1.0 + vb.norm()) ? 1 : 0;
    }
    return t;
}

Quaternion poisson_reconstruct(const BoundaryTrace& trace, double r, double theta) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("poisson_reconstruct: radius must lie in [0, 1)");
    if (trace.values.empty()) throw std::invalid_argument("poisson_reconstruct: empty trace");
    Quaternion acc;
    const std::size_t n = trace.values.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double s = theta - trace.thetas[k];
        const double kernel = (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(s) + r * r);
        acc += trace.values[k] * kernel;
    }
    return acc * (1.0 / static_cast<double>(n));
}

BoundaryTrace boundary_star_product(const BoundaryTrace& tf, const BoundaryTrace& tg,
                                    double tol) {
    if (tf.values.size() != tg.values.size() || tf.values.empty())
        throw std::invalid_argument("boundary_star_product: traces have mismatched nodes");
    if (dot(tf.unit.q(), tg.unit.q()) < 1.0 - 1e-12)
        throw std::invalid_argument("boundary_star_product: traces on different slices");

    const std::size_t n = tf.values.size();
    double scale = 0.0;
    for (const auto& v : tf.values) scale = std::max(scale, v.norm());

    BoundaryTrace out;
    out.unit = tf.unit;
    out.thetas = tf.thetas;
    out.values.resize(n);
    out.node_ok.assign(n, 1);
    const Quaternion iu = tf.unit.q();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t m = (n - k) % n;  // node of -theta_k
        const Quaternion p = tf.values[k];
        if (p.norm() <= tol * (1.0 + scale)) {
            out.values[k] = Quaternion{};
            out.node_ok[k] = 0;
            continue;
        }
        // g evaluated at the conjugated boundary point cos t + sin t * (p^-1 I p),
        // reconstructed from the trace values at +-theta.
        const Quaternion jt = p.inverse() * iu * p;
        const Quaternion gp = tg.values[k];
        const Quaternion gm = tg.values[m];
        const Quaternion gj = (gp + gm) * 0.5 + (jt * iu) * ((gm - gp) * 0.5);
        out.values[k] = p * gj;
        out.node_ok[k] = tf.node_ok.empty() ? 1 : tf.node_ok[k];
        if (!tg.node_ok.empty()) out.node_ok[k] &= tg.node_ok[k] & tg.node_ok[m];
    }
    return out;
}

double trace_lp_norm(const BoundaryTrace& trace, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("trace_lp_norm: p must be positive");
    double acc = 0.0, mx = 0.0;
    std::size_t used = 0;
    for (std::size_t k = 0; k < trace.values.size(); ++k) {
        if (!trace.node_ok.empty() && !trace.node_ok[k]) continue;
        const double a = trace.values[k].norm();
        mx = std::max(mx, a);
        acc += std::isinf(p) ? 0.0 : std::pow(a, p);
        ++used;
    }
    if (used == 0) throw std::domain_error("trace_lp_norm: no usable nodes");
    if (std::isinf(p)) return mx;
    return std::pow(acc / static_cast<double>(used), 1.0 / p);
}

}  // namespace qhardy

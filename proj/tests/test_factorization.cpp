#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhardy/factorization.hpp>
#include <qhardy/hardy.hpp>

#include "test_util.hpp"

#include <cmath>
#include <stdexcept>

using namespace qhardy;
using namespace qhardy::test;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion one = Quaternion::real(1);

RegularSeries linear(const Quaternion& a) { return RegularSeries({-a, one}); }  // q - a

ZeroFindOptions ball_only() {
    ZeroFindOptions opt;
    opt.max_radius = 1.0;
    return opt;
}
}  // namespace

TEST_CASE("extract_zeros leaves nonvanishing functions alone") {
    const RegularSeries f = RegularSeries::from_real({2, 0, 1});  // q^2 + 2
    const auto ze = extract_zeros(f, 64);
    CHECK(ze.g.factors.empty());
    CHECK(series_dist(ze.h, f) < 1e-12);
    CHECK(ze.residual < 1e-12);
}

TEST_CASE("extract_zeros keeps boundary spheres in the nonvanishing part") {
    // The sphere of q^2 + 1 sits on the boundary; its Blaschke factor is
    // identically 1, so the zero cannot be carried by g.
    const auto ze = extract_zeros(RegularSeries::from_real({1, 0, 1}), 64);
    CHECK(ze.g.factors.empty());
    CHECK(series_dist(ze.h, RegularSeries::from_real({1, 0, 1})) < 1e-12);
    CHECK(ze.residual < 1e-12);
}

TEST_CASE("extract_zeros on a two-point product") {
    const RegularSeries f = star_mul(linear(qi * 0.5), linear(qj * 0.5));
    const auto ze = extract_zeros(f, 160);
    CHECK(ze.residual < 1e-8);
    CHECK(ze.division_residual < 1e-8);
    CHECK(find_zeros(ze.h.trimmed(1e-12), ball_only()).empty());
    CHECK(series_dist(star_mul(ze.h, ze.g.series).truncated(160), f) < 1e-8);
}

TEST_CASE("extract_zeros splits spherical and isolated parts") {
    const RegularSeries f =
        star_mul(RegularSeries::from_real({0.25, 0, 1}),  // sphere (0, 1/2)
                 star_mul(linear(Quaternion::real(0.3)), RegularSeries::from_real({2})));
    const auto ze = extract_zeros(f, 160);
    CHECK(ze.residual < 1e-8);
    REQUIRE(ze.g.factors.size() == 2);
    CHECK(ze.g.factors[0].spherical);
    CHECK(std::abs(ze.g.factors[0].center.vec().norm() - 0.5) < 1e-8);
    CHECK(!ze.g.factors[1].spherical);
    CHECK(quat_close(ze.g.factors[1].center, Quaternion::real(0.3), 1e-8));
    CHECK(find_zeros(ze.h.trimmed(1e-12), ball_only()).empty());
}

TEST_CASE("extract_zeros handles an origin zero") {
    const RegularSeries f = star_mul(RegularSeries::identity(), linear(qi * 0.4));
    const auto ze = extract_zeros(f, 120);
    CHECK(ze.residual < 1e-8);
    REQUIRE(ze.g.factors.size() == 2);
    CHECK(find_zeros(ze.h.trimmed(1e-12), ball_only()).empty());
}

TEST_CASE("outer factor of q - 1/2") {
    const RegularSeries E =
        outer_factor_on_slice(linear(Quaternion::real(0.5)), ImaginaryUnit::i(), 64);
    CHECK(quat_close(E.coeff(0), one, 1e-8));
    CHECK(quat_close(E.coeff(1), Quaternion::real(-0.5), 1e-8));
    for (std::size_t n = 2; n <= E.degree(); ++n)
        CHECK(E.coeff(n).norm() < 1e-8);
}

TEST_CASE("outer factor of a polynomial with known interior roots") {
    // 2 (q - 1/2) * (q + 0.3) has outer factor 2 (1 - q/2) (1 + 0.3 q).
    const RegularSeries f =
        star_mul(RegularSeries::from_real({2}),
                 star_mul(linear(Quaternion::real(0.5)), linear(Quaternion::real(-0.3))));
    const RegularSeries E = outer_factor_on_slice(f, ImaginaryUnit::i(), 64);
    CHECK(quat_close(E.coeff(0), Quaternion::real(2.0), 1e-8));
    CHECK(quat_close(E.coeff(1), Quaternion::real(-0.4), 1e-8));
    CHECK(quat_close(E.coeff(2), Quaternion::real(-0.3), 1e-8));
}

TEST_CASE("outer factor of inner functions is constant") {
    const RegularSeries m = blaschke_factor(qi * 0.5, 120);
    const RegularSeries E = outer_factor_on_slice(m, ImaginaryUnit::i(), 120);
    CHECK(quat_close(E.coeff(0), one, 1e-6));
    for (std::size_t n = 1; n <= E.degree(); ++n) CHECK(E.coeff(n).norm() < 1e-6);

    const RegularSeries Eq = outer_factor_on_slice(RegularSeries::identity(), ImaginaryUnit::j(), 64);
    CHECK(quat_close(Eq.coeff(0), one, 1e-8));
}

TEST_CASE("outer factor requires slice coefficients") {
    CHECK_THROWS_AS(outer_factor_on_slice(linear(qj), ImaginaryUnit::i(), 32),
                    std::invalid_argument);
}

TEST_CASE("outer-inner split of q") {
    const auto sp = outer_inner_split(RegularSeries::identity(), ImaginaryUnit::i(), 64);
    CHECK(quat_close(sp.E.coeff(0), one, 1e-7));
    CHECK(quat_close(sp.Inner.coeff(1), one, 1e-7));
    REQUIRE(sp.B.factors.size() == 1);
    CHECK(quat_close(sp.B.factors[0].center, Quaternion{}, 1e-9));
    CHECK(sp.certificates.pass());
    CHECK(sp.certificates.reconstruction_residual < 1e-6);
}

TEST_CASE("outer-inner split of a slice polynomial with interior zeros") {
    const RegularSeries f =
        star_mul(RegularSeries::constant(Quaternion{1, 2, 0, 0}),
                 star_mul(linear(qi * 0.5), linear(Quaternion{0.2, -0.4, 0, 0})));
    const auto sp = outer_inner_split(f, ImaginaryUnit::i(), 160);
    CHECK(sp.certificates.reconstruction_residual < 1e-6);
    CHECK(sp.certificates.inner_split_residual < 1e-6);
    CHECK(sp.certificates.inner_interior_max <= 1.0 + 1e-6);
    CHECK(sp.certificates.inner_boundary_dev <= 1e-5);
    CHECK(sp.certificates.boundary_modulus_dev <= 1e-5);
    CHECK(sp.certificates.outer_domination_min >= -1e-8);
    CHECK(sp.certificates.norm_ratio_dev <= 1e-5);
    CHECK(sp.certificates.pass());
    CHECK(sp.B.factors.size() == 2);
    // The singular part of a polynomial is a unimodular constant; it carries
    // the phase of f(0) because E(0) and the Blaschke values at 0 are
    // positive real.
    CHECK(sp.S.coeff(0).norm() == doctest::Approx(1.0).epsilon(1e-5));
    for (std::size_t n = 1; n <= sp.S.degree(); ++n)
        CHECK(sp.S.coeff(n).norm() < 1e-5);
}

TEST_CASE("outer-inner split flags a boundary sphere zero") {
    // q^2 + 1 vanishes on the boundary sphere.  The reconstruction still
    // holds and the interior zero lands in B, but no truncated series can
    // carry the boundary zero with unit boundary modulus, so the inner
    // certificates report the degraded fit instead of passing.
    const RegularSeries f =
        star_mul(RegularSeries::from_real({1, 0, 1}), linear(Quaternion::real(0.5)));
    const auto sp = outer_inner_split(f, ImaginaryUnit::i(), 160);
    CHECK(sp.certificates.reconstruction_residual < 1e-7);
    REQUIRE(sp.B.factors.size() == 1);
    CHECK(quat_close(sp.B.factors[0].center, Quaternion::real(0.5), 1e-6));
    CHECK(!sp.certificates.pass());
    CHECK(sp.certificates.inner_boundary_dev > 1e-3);
}

TEST_CASE("hardy norms of outer and original agree") {
    const RegularSeries f = star_mul(linear(qi * 0.3), linear(Quaternion::real(0.6)));
    const auto sp = outer_inner_split(f, ImaginaryUnit::i(), 160);
    const double nf = hardy_norm(f, 2.0).value;
    const double ne = hardy_norm(sp.E, 2.0).value;
    CHECK(ne == doctest::Approx(nf).epsilon(1e-5));
}

TEST_CASE("outer certificate") {
    const auto good = outer_certificate(linear(Quaternion::real(2.0)), 2.0, 64);
    CHECK(good.pass);
    CHECK(good.nonvanishing);
    CHECK(good.inverse_norm_finite);
    CHECK(good.conjugate_exponent == doctest::Approx(2.0));

    const auto zero_at_origin = outer_certificate(RegularSeries::identity(), 2.0, 64);
    CHECK(!zero_at_origin.pass);
    CHECK(!zero_at_origin.nonvanishing);

    const auto moebius = outer_certificate(blaschke_factor(Quaternion::real(0.5), 120), 2.0, 120);
    CHECK(!moebius.pass);

    CHECK_THROWS_AS(outer_certificate(linear(Quaternion::real(2.0)), 0.5, 32),
                    std::invalid_argument);
}

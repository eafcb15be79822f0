#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhardy/slice.hpp>
#include <qhardy/zeros.hpp>

#include "test_util.hpp"

#include <cmath>
#include <complex>

using namespace qhardy;
using namespace qhardy::test;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
const Quaternion one = Quaternion::real(1);
using cx = std::complex<double>;
}  // namespace

TEST_CASE("splitting examples") {
    const ImaginaryUnit I = ImaginaryUnit::i();
    const ImaginaryUnit J = ImaginaryUnit::j();

    const auto s1 = split(RegularSeries({-qi, one}), I, J);  // q - i
    REQUIRE(s1.F.size() == 2);
    CHECK(std::abs(s1.F[0] - cx(0, -1)) < 1e-15);
    CHECK(std::abs(s1.F[1] - cx(1, 0)) < 1e-15);
    CHECK(std::abs(s1.G[0]) < 1e-15);
    CHECK(std::abs(s1.G[1]) < 1e-15);

    const auto s2 = split(RegularSeries::monomial(1, qj), I, J);  // q * j
    CHECK(std::abs(s2.F[1]) < 1e-15);
    CHECK(std::abs(s2.G[1] - cx(1, 0)) < 1e-15);

    const auto s3 = split(RegularSeries::monomial(1, qi + qk), I, J);  // q * (i + k)
    CHECK(std::abs(s3.F[1] - cx(0, 1)) < 1e-15);
    CHECK(std::abs(s3.G[1] - cx(0, 1)) < 1e-15);
}

TEST_CASE("extend inverts split") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const RegularSeries f = random_series(rng, 6, 2.0);
        const ImaginaryUnit I = random_unit(rng);
        const ImaginaryUnit J = orthogonal_unit(I);
        CHECK(std::abs(dot(I.q(), J.q())) < 1e-12);
        const auto s = split(f, I, J);
        CHECK(series_dist(extend(s.F, s.G, I, J), f) < 1e-13);
    }
}

TEST_CASE("slice projection round trip") {
    const cx z{0.3, -0.7};
    const ImaginaryUnit I = ImaginaryUnit::from_vector(1.0, 2.0, -2.0);
    CHECK(std::abs(project_to_slice(from_slice(z, I), I) - z) < 1e-14);
    CHECK_THROWS_AS(project_to_slice(qj, ImaginaryUnit::i()), std::invalid_argument);
}

TEST_CASE("representation formula on q^2") {
    const RegularSeries f = RegularSeries::from_real({0, 0, 1});
    const double x = 0.3, y = 0.4;
    for (const auto& J : sample_unit_sphere(8, 3)) {
        const Quaternion got = representation_eval(f, x, y, ImaginaryUnit::i(), J);
        const Quaternion want = Quaternion::real(x * x - y * y) + J.q() * (2 * x * y);
        CHECK(quat_close(got, want, 1e-14));
    }
}

TEST_CASE("representation formula degenerate cases") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 50; ++t) {
        const RegularSeries f = random_series(rng, 5);
        const ImaginaryUnit I = ImaginaryUnit::i();
        // J = I collapses to direct evaluation; y = 0 to the real point.
        const double x = 0.4, y = 0.3;
        CHECK(quat_close(representation_eval(f, x, y, I, I),
                         f.eval(Quaternion{x, y, 0, 0}), 1e-13));
        CHECK(quat_close(representation_eval(f, x, 0.0, I, random_unit(rng)),
                         f.eval(Quaternion::real(x)), 1e-13));
    }
}

TEST_CASE("representation formula matches evaluation everywhere") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 100; ++t) {
        const RegularSeries f = random_series(rng, 6);
        const ImaginaryUnit I = random_unit(rng);
        const ImaginaryUnit J = random_unit(rng);
        std::uniform_real_distribution<double> d(-0.9, 0.9);
        const double x = d(rng), y = std::abs(d(rng));
        const Quaternion q = Quaternion::real(x) + J.q() * y;
        CHECK(quat_close(representation_eval(f, x, y, I, J), f.eval(q), 1e-12));
    }
}

TEST_CASE("sphere affine form examples") {
    const auto a1 = sphere_affine(RegularSeries::from_real({0, 0, 1}), 0.0, 1.0);  // q^2
    CHECK(quat_close(a1.b, -one, 1e-14));
    CHECK(quat_close(a1.c, Quaternion{}, 1e-14));

    const auto a2 = sphere_affine(RegularSeries::identity(), 0.4, 0.7);  // q
    CHECK(quat_close(a2.b, Quaternion::real(0.4), 1e-14));
    CHECK(quat_close(a2.c, Quaternion::real(0.7), 1e-14));

    const auto a3 = sphere_affine(RegularSeries({-qi, one}), 0.0, 1.0);  // q - i
    CHECK(quat_close(a3.b, -qi, 1e-14));
    CHECK(quat_close(a3.c, one, 1e-14));

    // The affine form reproduces the restriction to the sphere.
    std::mt19937_64 rng(34);
    for (int t = 0; t < 50; ++t) {
        const RegularSeries f = random_series(rng, 5);
        const auto form = sphere_affine(f, 0.2, 0.6);
        const ImaginaryUnit J = random_unit(rng);
        CHECK(quat_close(form.at(J), f.eval(Quaternion::real(0.2) + J.q() * 0.6), 1e-12));
    }
}

TEST_CASE("conjugation map properties") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 50; ++t) {
        const RegularSeries fr = RegularSeries::from_real({1.5, -0.25, 2.0});
        const Quaternion q = random_ball_point(rng, 2.0);
        CHECK(quat_close(conjugation_map(fr, q), q, 1e-12));  // real coefficients act trivially

        const RegularSeries f = random_series(rng, 4);
        if (symmetrization(f).eval(q).norm() < 1e-3) continue;  // away from zeros of f^s
        const Quaternion p = conjugation_map(f, q);
        CHECK(p.norm() == doctest::Approx(q.norm()).epsilon(1e-10));
        CHECK(p.real_part() == doctest::Approx(q.real_part()).epsilon(1e-10));
        // T_{f^c} inverts T_f.
        CHECK(quat_close(conjugation_map(regular_conjugate(f), p), q, 1e-9 * (1.0 + q.norm())));
    }
    CHECK(quat_close(conjugation_map(RegularSeries({qi, qj}), Quaternion::real(0.7)),
                     Quaternion::real(0.7), 1e-14));
}

TEST_CASE("sphere modulus extremes are exact and attained") {
    std::mt19937_64 rng(36);
    for (int t = 0; t < 50; ++t) {
        const RegularSeries f = random_series(rng, 5);
        std::uniform_real_distribution<double> d(-0.8, 0.8);
        const double x = d(rng), y = 0.1 + std::abs(d(rng));
        const auto ex = sphere_max_min_modulus(f, x, y);
        CHECK(ex.max >= ex.min);
        CHECK(f.eval(Quaternion::real(x) + ex.arg_max.q() * y).norm() ==
              doctest::Approx(ex.max).epsilon(1e-10));
        CHECK(f.eval(Quaternion::real(x) + ex.arg_min.q() * y).norm() ==
              doctest::Approx(ex.min).epsilon(1e-10));
        for (const auto& J : sample_unit_sphere(100, 9)) {
            const double v = f.eval(Quaternion::real(x) + J.q() * y).norm();
            CHECK(v <= ex.max + 1e-10);
            CHECK(v >= ex.min - 1e-10);
        }
    }
}

TEST_CASE("zeros on one sphere come from the slice restriction") {
    // Coefficients in L_i: a zero on the sphere (x, y) forces the slice
    // restriction to vanish at x + yi or x - yi, and conversely.
    const RegularSeries f({qi * (-0.5), one});  // q - i/2, vanishes at i/2 only
    const auto on = sphere_max_min_modulus(f, 0.0, 0.5);
    CHECK(on.min < 1e-12);
    CHECK(quat_close(on.arg_min.q(), qi, 1e-9));
    const auto off = sphere_max_min_modulus(f, 0.0, 0.3);
    CHECK(off.min > 0.1);

    // Blaschke factor with center in L_i behaves the same way.
    const RegularSeries m = blaschke_factor(qi * 0.5, 60);
    CHECK(sphere_max_min_modulus(m, 0.0, 0.5).min < 1e-10);
    CHECK(sphere_max_min_modulus(m, 0.0, 0.25).min > 0.05);
}

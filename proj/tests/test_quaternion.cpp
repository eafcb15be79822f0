#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhardy/quaternion.hpp>

#include "test_util.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

using namespace qhardy;
using namespace qhardy::test;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
}  // namespace

TEST_CASE("hamilton multiplication table") {
    CHECK(quat_close(qi * qj, qk, 1e-15));
    CHECK(quat_close(qj * qk, qi, 1e-15));
    CHECK(quat_close(qk * qi, qj, 1e-15));
    CHECK(quat_close(qj * qi, -qk, 1e-15));
    CHECK(quat_close(qi * qi, Quaternion::real(-1), 1e-15));
    CHECK(quat_close(qj * qj, Quaternion::real(-1), 1e-15));
    CHECK(quat_close(qk * qk, Quaternion::real(-1), 1e-15));
}

TEST_CASE("inverse examples") {
    CHECK(quat_close(qi.inverse(), -qi, 1e-15));
    CHECK(quat_close(Quaternion::real(2).inverse(), Quaternion::real(0.5), 1e-15));
    const Quaternion p{1, 1, 0, 0};
    CHECK(quat_close(p.inverse(), Quaternion{0.5, -0.5, 0, 0}, 1e-15));
    CHECK_THROWS_AS(Quaternion{}.inverse(), std::domain_error);
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = random_quaternion(rng, 3.0);
        const Quaternion b = random_quaternion(rng, 3.0);
        CHECK((a * b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
        CHECK(quat_close((a * b).conj(), b.conj() * a.conj(), 1e-12 * (1.0 + (a * b).norm())));
    }
}

TEST_CASE("inverse round trip") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = random_quaternion(rng, 2.0) + Quaternion::real(3.0);
        CHECK(quat_close(a * a.inverse(), Quaternion::real(1), 1e-13));
        CHECK(quat_close(a.inverse() * a, Quaternion::real(1), 1e-13));
    }
}

TEST_CASE("slice decomposition examples") {
    const auto c1 = slice_decompose(Quaternion{3, 4, 0, 0});
    CHECK(c1.x == doctest::Approx(3.0));
    CHECK(c1.y == doctest::Approx(4.0));
    CHECK(quat_close(c1.unit.q(), qi, 1e-15));

    const auto c2 = slice_decompose(Quaternion{3, 0, 4, 0});
    CHECK(c2.x == doctest::Approx(3.0));
    CHECK(c2.y == doctest::Approx(4.0));
    CHECK(quat_close(c2.unit.q(), qj, 1e-15));

    const auto c3 = slice_decompose(Quaternion::real(-5));
    CHECK(c3.x == doctest::Approx(-5.0));
    CHECK(c3.y == doctest::Approx(0.0));
    CHECK(quat_close(c3.point(), Quaternion::real(-5), 1e-14));
}

TEST_CASE("slice decomposition round trip") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = random_quaternion(rng, 5.0);
        const auto c = slice_decompose(q);
        CHECK(c.y >= 0.0);
        CHECK(std::abs(c.unit.q().norm() - 1.0) < 1e-12);
        CHECK(quat_close(c.point(), q, 1e-14 * (1.0 + q.norm())));
    }
}

TEST_CASE("exp on slice examples") {
    CHECK(quat_close(exp_on_slice(ImaginaryUnit::i(), M_PI / 2), qi, 1e-12));
    CHECK(quat_close(exp_on_slice(ImaginaryUnit::j(), 0.0), Quaternion::real(1), 1e-15));
    CHECK(quat_close(exp_on_slice(ImaginaryUnit::k(), M_PI), Quaternion::real(-1), 1e-12));
}

TEST_CASE("exp on slice additivity") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> ang(-6.0, 6.0);
    for (int t = 0; t < 100; ++t) {
        const ImaginaryUnit I = random_unit(rng);
        const double a = ang(rng), b = ang(rng);
        CHECK(quat_close(exp_on_slice(I, a) * exp_on_slice(I, b), exp_on_slice(I, a + b), 1e-12));
    }
}

TEST_CASE("imaginary unit validation") {
    CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0.5, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ImaginaryUnit(Quaternion{}), std::invalid_argument);
    CHECK(quat_close(ImaginaryUnit(Quaternion{0, 0.5, 0, 0}).q(), qi, 1e-15));
    const ImaginaryUnit u = ImaginaryUnit::from_vector(1.0, 1.0, 0.0);
    CHECK(quat_close(u.q() * u.q(), Quaternion::real(-1), 1e-14));
}

TEST_CASE("unit sphere sampling") {
    const auto one = sample_unit_sphere(1);
    REQUIRE(one.size() == 1);
    CHECK(quat_close(one[0].q(), qi, 1e-15));

    const auto six = sample_unit_sphere(6);
    REQUIRE(six.size() == 6);
    for (const Quaternion& axis : {qi, qj, qk, -qi, -qj, -qk}) {
        bool found = false;
        for (const auto& u : six) found = found || quat_close(u.q(), axis, 1e-12);
        CHECK(found);
    }

    const auto many = sample_unit_sphere(100, 7);
    REQUIRE(many.size() == 100);
    for (const auto& u : many) {
        CHECK(std::abs(u.q().norm() - 1.0) < 1e-12);
        CHECK(std::abs(u.q().w) < 1e-12);
    }
    for (std::size_t a = 0; a < many.size(); ++a)
        for (std::size_t b = a + 1; b < many.size(); ++b)
            CHECK(quat_dist(many[a].q(), many[b].q()) > 1e-6);

    const auto again = sample_unit_sphere(100, 7);
    for (std::size_t k = 0; k < many.size(); ++k)
        CHECK(quat_close(many[k].q(), again[k].q(), 0.0));
}

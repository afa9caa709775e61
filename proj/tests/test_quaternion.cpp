#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "attsync/quaternion.hpp"
#include "test_support.hpp"

using namespace attsync;
using attsync::testing::random_unit;
using attsync::testing::random_unit_vec;

namespace {

// Independent componentwise cross product, kept separate from Vec3::cross.
Vec3 cross_oracle(const Vec3& a, const Vec3& b) {
    Vec3 r;
    r.x1 = a.x2 * b.x3 - a.x3 * b.x2;
    r.x2 = -(a.x1 * b.x3 - a.x3 * b.x1);
    r.x3 = a.x1 * b.x2 - a.x2 * b.x1;
    return r;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a.m[i][j] - b.m[i][j]));
    return m;
}

}  // namespace

TEST_CASE("cross_matrix examples") {
    const Mat3 z = cross_matrix({0, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(z.m[i][j] == 0.0);

    const Mat3 e1 = cross_matrix({1, 0, 0});
    const double expected[3][3] = {{0, 0, 0}, {0, 0, -1}, {0, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(e1.m[i][j] == expected[i][j]);
}

TEST_CASE("cross_matrix matches componentwise cross product") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 1000; ++k) {
        const Vec3 x{nd(rng), nd(rng), nd(rng)};
        const Vec3 y{nd(rng), nd(rng), nd(rng)};
        const Vec3 got = cross_matrix(x) * y;
        const Vec3 want = cross_oracle(x, y);
        CHECK(norm(got - want) < 1e-13);
    }
}

TEST_CASE("cross_matrix is skew-symmetric with x in its kernel row") {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 1000; ++k) {
        const Vec3 x{nd(rng), nd(rng), nd(rng)};
        const Mat3 m = cross_matrix(x);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(m.m[i][j] == -m.m[j][i]);
        // x^T M = 0
        for (int j = 0; j < 3; ++j) {
            const double c = x.x1 * m.m[0][j] + x.x2 * m.m[1][j] + x.x3 * m.m[2][j];
            CHECK(std::abs(c) < 1e-14 * (1.0 + dot(x, x)));
        }
    }
}

TEST_CASE("from_axis_angle examples") {
    const auto q0 = from_axis_angle({0, 0, 1}, 0.0);
    CHECK(q0.eps == 1.0);
    CHECK(q0.vec == Vec3{0, 0, 0});

    const auto qpi = from_axis_angle({0, 0, 1}, M_PI);
    CHECK(std::abs(qpi.eps) < 1e-15);
    CHECK(std::abs(qpi.vec.x3 - 1.0) < 1e-15);

    const auto qh = from_axis_angle({1, 0, 0}, M_PI / 2);
    CHECK(qh.eps == Catch::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
    CHECK(qh.vec.x1 == Catch::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));

    CHECK_THROWS_AS(from_axis_angle({1, 1, 0}, 0.3), validation_error);
}

TEST_CASE("mult_error examples") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        const auto q = random_unit(rng);
        const auto e = mult_error(q, q);
        CHECK(std::abs(e.eps - 1.0) < 1e-12);
        CHECK(norm(e.vec) < 1e-12);
    }
    const auto e = mult_error(UnitQuaternion(1, {0, 0, 0}), UnitQuaternion(0, {0, 0, 1}));
    CHECK(e.eps == 0.0);
    CHECK(e.vec == Vec3{0, 0, -1});
}

TEST_CASE("mult_error satisfies the unity constraint") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 10000; ++k) {
        const auto e = mult_error(random_unit(rng), random_unit(rng));
        CHECK(std::abs(e.eps * e.eps + dot(e.vec, e.vec) - 1.0) < 1e-12);
    }
}

TEST_CASE("mult_error matches the rotation-matrix composition oracle") {
    // Documented convention: with C(q) = (eps^2 - q.q)I + 2qq^T - 2 eps q^x,
    // C(mult_error(qi, qj)) = C(qi) * C(qj)^T.
    std::mt19937_64 rng(15);
    for (int k = 0; k < 10000; ++k) {
        const auto qi = random_unit(rng);
        const auto qj = random_unit(rng);
        const auto e = mult_error(qi, qj);
        const Mat3 lhs = rotation_matrix(e);
        const Mat3 rhs = rotation_matrix(qi) * rotation_matrix(qj).transposed();
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("kinematics_rhs examples") {
    const auto q = UnitQuaternion(0.5, {0.5, 0.5, 0.5});
    const auto d0 = kinematics_rhs(q, {0, 0, 0});
    CHECK(d0.deps == 0.0);
    CHECK(d0.dvec == Vec3{0, 0, 0});

    const auto d1 = kinematics_rhs(UnitQuaternion(1, {0, 0, 0}), {0.2, -0.4, 0.6});
    CHECK(d1.deps == 0.0);
    CHECK(norm(d1.dvec - Vec3{0.1, -0.2, 0.3}) < 1e-15);
}

TEST_CASE("kinematics_rhs preserves the unit norm to first order") {
    std::mt19937_64 rng(16);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 10000; ++k) {
        const auto q = random_unit(rng);
        const Vec3 w{nd(rng), nd(rng), nd(rng)};
        const auto d = kinematics_rhs(q, w);
        CHECK(std::abs(q.eps * d.deps + dot(q.vec, d.dvec)) < 1e-12);
    }
}

TEST_CASE("canonicalize examples") {
    const Vec3 v{0.5, 0.5, std::sqrt(0.25)};  // |(-0.5, v)| = 1
    const auto a = canonicalize(UnitQuaternion(-0.5, v));
    CHECK(a.eps == 0.5);
    CHECK(a.vec == -v);

    const auto b = canonicalize(UnitQuaternion(0.0, {-1, 0, 0}));
    CHECK(b.eps == 0.0);
    CHECK(b.vec == Vec3{1, 0, 0});

    const auto c0 = UnitQuaternion(0.3, {std::sqrt(1 - 0.09), 0, 0});
    CHECK(canonicalize(c0) == c0);
}

TEST_CASE("canonicalize is sign-invariant and lands in S1 u S2") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 5000; ++k) {
        const auto q = random_unit(rng);
        const auto c = canonicalize(q);
        CHECK(c == canonicalize(-q));
        const auto s = classify_subspace(c);
        CHECK((s == Subspace::S1 || s == Subspace::S2));
    }
}

TEST_CASE("classify_subspace on the five-spacecraft initial attitudes") {
    CHECK(classify_subspace(testing::from_quad(0.4796, -0.0077, -0.5447, -0.6879)) ==
          Subspace::S1);
    CHECK(classify_subspace(testing::from_quad(0.0, -0.6894, -0.6140, 0.3843)) ==
          Subspace::S2);
    CHECK(classify_subspace(UnitQuaternion(-0.3, {std::sqrt(1 - 0.09), 0, 0})) ==
          Subspace::S3);
    CHECK(classify_subspace(UnitQuaternion(0.0, {0, 0, -1})) == Subspace::S4);
}

TEST_CASE("unity validation policy") {
    // Far from unit: rejected.
    CHECK_THROWS_AS(UnitQuaternion(1.1, {0, 0, 0}), validation_error);
    // Small defect: silently renormalized.
    const double e = 1.0 + 2e-8;
    const UnitQuaternion q(e, {0, 0, 0});
    CHECK(std::abs(q.eps - 1.0) < 1e-12);
    // The truncated config attitudes round-trip through renormalization upstream;
    // a raw 4-decimal quadruple exceeds the strict API tolerance.
    CHECK_THROWS_AS(UnitQuaternion(0.0, Vec3{-0.6894, -0.6140, 0.3843}), validation_error);
}

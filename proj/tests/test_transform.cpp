#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "attsync/digraph.hpp"
#include "attsync/transform.hpp"
#include "test_support.hpp"

using namespace attsync;
using namespace attsync::testing;

namespace {

// Case-2-shaped topology: roots {2,3,4}, non-roots {1,5}.
RootAnalysis case2_roots() {
    return root_analysis(DirectedGraph::build(
        5, {{5, 1, 1.0}, {4, 2, 0.5}, {2, 3, 0.8}, {3, 4, 0.6}, {4, 5, 0.3}}));
}

std::vector<UnitQuaternion> spacecraft_initial() {
    return {from_quad(0.0, -0.6894, -0.6140, 0.3843),
            from_quad(0.0, -0.0602, 0.7248, 0.6863),
            from_quad(0.0, 0.8975, -0.4409, 0.0119),
            from_quad(0.4796, -0.0077, -0.5447, -0.6879),
            from_quad(0.5929, 0.1024, 0.7263, 0.3325)};
}

// Direct evaluation of the transformed scalar part, independent of
// apply_transform: eps_hat = eps*eps_v + q . q_v.
double eps_hat_oracle(const UnitQuaternion& q, const UnitQuaternion& v) {
    return q.eps * v.eps + q.vec.x1 * v.vec.x1 + q.vec.x2 * v.vec.x2 + q.vec.x3 * v.vec.x3;
}

void check_postcondition(const std::vector<UnitQuaternion>& states, const RootAnalysis& ra,
                         const TransformResult& tr) {
    double max_root = -2.0;
    for (size_t i = 0; i < states.size(); ++i) {
        const double e = eps_hat_oracle(states[i], tr.v);
        REQUIRE(e >= -1e-12);
        REQUIRE(std::abs(e - tr.transformed_initial[i].eps) < 1e-12);
        if (ra.is_root(static_cast<int>(i) + 1)) max_root = std::max(max_root, e);
    }
    REQUIRE(max_root > 0.0);
}

}  // namespace

TEST_CASE("apply_transform examples") {
    std::mt19937_64 rng(41);
    const UnitQuaternion identity(1, {0, 0, 0});
    for (int k = 0; k < 100; ++k) {
        const auto q = random_unit(rng);
        const auto t = apply_transform(q, identity);
        CHECK(norm(t.vec - q.vec) < 1e-15);
        CHECK(std::abs(t.eps - q.eps) < 1e-15);
    }
    const auto z = apply_transform(UnitQuaternion(0, {0, 0, 1}), UnitQuaternion(0, {0, 0, 1}));
    CHECK(z.eps == 1.0);
    CHECK(norm(z.vec) < 1e-15);
    for (int k = 0; k < 1000; ++k) {
        const auto t = apply_transform(random_unit(rng), random_unit(rng));
        CHECK(std::abs(t.eps * t.eps + dot(t.vec, t.vec) - 1.0) < 1e-12);
    }
}

TEST_CASE("inverse_transform round trip") {
    std::mt19937_64 rng(42);
    const UnitQuaternion identity(1, {0, 0, 0});
    for (int k = 0; k < 2000; ++k) {
        const auto q = random_unit(rng);
        const auto v = random_unit(rng);
        const auto back = inverse_transform(apply_transform(q, v), v);
        const auto a = canonicalize(back);
        const auto b = canonicalize(q);
        CHECK(std::abs(a.eps - b.eps) < 1e-12);
        CHECK(norm(a.vec - b.vec) < 1e-12);
    }
    const auto q = random_unit(rng);
    CHECK(norm(inverse_transform(q, identity).vec - q.vec) < 1e-15);
    const auto rt = inverse_transform(apply_transform(q, q), q);
    CHECK(std::abs(rt.eps - q.eps) < 1e-12);
    CHECK(norm(rt.vec - q.vec) < 1e-12);
}

TEST_CASE("multiplicative errors are invariant under any frame change") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 5000; ++k) {
        const auto qi = random_unit(rng);
        const auto qj = random_unit(rng);
        const auto v = random_unit(rng);
        const auto e = mult_error(qi, qj);
        const auto eh = mult_error(apply_transform(qi, v), apply_transform(qj, v));
        CHECK(std::abs(e.eps - eh.eps) < 1e-12);
        CHECK(std::abs(e.vec.x1 - eh.vec.x1) < 1e-12);
        CHECK(std::abs(e.vec.x2 - eh.vec.x2) < 1e-12);
        CHECK(std::abs(e.vec.x3 - eh.vec.x3) < 1e-12);
    }
}

TEST_CASE("classification of the spacecraft initial set") {
    const auto ra2 = case2_roots();
    REQUIRE(ra2.roots == std::vector<int>{2, 3, 4});
    const auto cls2 = classify_initial(spacecraft_initial(), ra2);
    CHECK(cls2.tag == ConditionTag::II1);  // spacecraft 4 is a root in S1

    const auto ra1 = root_analysis(DirectedGraph::build(
        5, {{5, 1, 1.0}, {1, 2, 0.5}, {2, 3, 0.8}, {3, 4, 0.6}, {4, 5, 0.3}}));
    const auto cls1 = classify_initial(spacecraft_initial(), ra1);
    CHECK(cls1.tag == ConditionTag::I1);

    std::vector<UnitQuaternion> all_up(5, UnitQuaternion(0, {0, 0, 1}));
    const auto clsu = classify_initial(all_up, ra2);
    CHECK(clsu.tag == ConditionTag::II2);
    CHECK(clsu.part == ConditionPart::P1);

    std::vector<UnitQuaternion> bad(5, UnitQuaternion(0, {0, 0, -1}));
    CHECK_THROWS_AS(classify_initial(bad, ra2), validation_error);
}

TEST_CASE("transform constructions for the enumerated examples") {
    const auto ra = case2_roots();

    // Part 1: everything at (0,(0,0,1)) maps to the identity scalar.
    std::vector<UnitQuaternion> up(5, UnitQuaternion(0, {0, 0, 1}));
    const auto t1 = find_transform(up, ra);
    CHECK(t1.cls.part == ConditionPart::P1);
    CHECK(t1.v.eps == 0.0);
    CHECK(t1.v.vec == Vec3{0, 0, 1});
    for (const auto& q : t1.transformed_initial) CHECK(std::abs(q.eps - 1.0) < 1e-12);

    // Part 2 hand example: roots at (0,(0,0,1)), non-roots at (0.6,(0,0,-0.8)).
    std::vector<UnitQuaternion> p2{
        UnitQuaternion(0.6, {0, 0, -0.8}), UnitQuaternion(0, {0, 0, 1}),
        UnitQuaternion(0, {0, 0, 1}), UnitQuaternion(0, {0, 0, 1}),
        UnitQuaternion(0.6, {0, 0, -0.8})};
    const auto t2 = find_transform(p2, ra);
    CHECK(t2.cls.part == ConditionPart::P2);
    CHECK(t2.v.eps == Catch::Approx(0.8).margin(1e-15));
    CHECK(t2.v.vec.x3 == Catch::Approx(0.6).margin(1e-15));
    CHECK(std::abs(t2.transformed_initial[0].eps) < 1e-12);            // non-root: 0.8*0.6 - 0.6*0.8
    CHECK(t2.transformed_initial[1].eps == Catch::Approx(0.6).margin(1e-12));  // root
    check_postcondition(p2, ra, t2);
}

TEST_CASE("roots-only constructions") {
    // some root with q3 > 0
    std::mt19937_64 rng(44);
    std::vector<UnitQuaternion> a{random_s2_q3pos(rng), random_s2_q3zero(rng),
                                  random_s2(rng)};
    const auto ta = find_transform_roots_only(a);
    CHECK(ta.v.eps == 0.0);
    CHECK(ta.v.vec == Vec3{0, 0, 1});

    // everyone exactly at (0,(1,0,0))
    std::vector<UnitQuaternion> b(4, UnitQuaternion(0, {1, 0, 0}));
    const auto tb = find_transform_roots_only(b);
    CHECK(tb.v.vec == Vec3{1, 0, 0});
    for (const auto& q : tb.transformed_initial) CHECK(std::abs(q.eps - 1.0) < 1e-12);

    // all q3 = 0 but not all q1 = 1
    std::vector<UnitQuaternion> c{UnitQuaternion(0, {1, 0, 0}), random_s2_q3zero(rng),
                                  random_s2_q3zero(rng)};
    const auto tc = find_transform_roots_only(c);
    CHECK(tc.v.vec == Vec3{0, 1, 0});
    for (const auto& q : tc.transformed_initial) CHECK(q.eps >= -1e-12);

    CHECK_THROWS_AS(find_transform_roots_only({UnitQuaternion(1, {0, 0, 0})}),
                    validation_error);
}

TEST_CASE("randomized constructions satisfy the postcondition for every part") {
    std::mt19937_64 rng(45);
    const auto ra = case2_roots();
    const auto pick_s2 = [&](bool force_q3pos) {
        if (force_q3pos) return random_s2_q3pos(rng);
        return (rng() % 2) ? random_s2(rng) : random_s2_q3zero(rng);
    };

    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<UnitQuaternion> st(5, UnitQuaternion(1, {0, 0, 0}));

        // Part 1: roots all S2 with at least one q3 > 0, non-roots S2.
        st[1] = random_s2_q3pos(rng);
        st[2] = pick_s2(false);
        st[3] = pick_s2(false);
        st[0] = pick_s2(false);
        st[4] = pick_s2(false);
        auto t = find_transform(st, ra);
        CHECK(t.cls.part == ConditionPart::P1);
        check_postcondition(st, ra, t);

        // Part 2: additionally at least one non-root in S1.
        st[0] = random_s1(rng);
        if (rng() % 2) st[4] = random_s1(rng);
        t = find_transform(st, ra);
        CHECK(t.cls.part == ConditionPart::P2);
        check_postcondition(st, ra, t);

        // Part 3: roots on the q3 = 0 circle, non-roots in S2.
        st[1] = random_s2_q3zero(rng);
        st[2] = random_s2_q3zero(rng);
        st[3] = random_s2_q3zero(rng);
        st[0] = pick_s2(iter % 3 == 0);
        st[4] = pick_s2(false);
        t = find_transform(st, ra);
        CHECK(t.cls.part == ConditionPart::P3);
        check_postcondition(st, ra, t);

        // Part 3 degenerate: no node anywhere has q3 > 0.
        st[0] = random_s2_q3zero(rng);
        st[4] = random_s2_q3zero(rng);
        t = find_transform(st, ra);
        CHECK(t.cls.part == ConditionPart::P3);
        check_postcondition(st, ra, t);

        // Part 4: roots on the q3 = 0 circle, some non-root in S1.
        st[0] = random_s1(rng);
        st[4] = (rng() % 2) ? random_s2_q3pos(rng) : random_s2_q3zero(rng);
        t = find_transform(st, ra);
        CHECK(t.cls.part == ConditionPart::P4);
        check_postcondition(st, ra, t);

        // Part 4 degenerate: the q3 > 0 minimum ranges over an empty set.
        st[4] = random_s1(rng);
        t = find_transform(st, ra);
        CHECK(t.cls.part == ConditionPart::P4);
        check_postcondition(st, ra, t);
    }
}

TEST_CASE("find_transform is deterministic") {
    std::mt19937_64 rng(46);
    const auto ra = case2_roots();
    std::vector<UnitQuaternion> st{random_s1(rng), random_s2_q3zero(rng),
                                   random_s2_q3zero(rng), random_s2_q3zero(rng),
                                   random_s2_q3pos(rng)};
    const auto a = find_transform(st, ra);
    const auto b = find_transform(st, ra);
    CHECK(a.v.eps == b.v.eps);
    CHECK(a.v.vec == b.v.vec);
    CHECK(a.cls == b.cls);
}

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "attsync/digraph.hpp"
#include "attsync/quaternion.hpp"

namespace attsync {

enum class ConditionTag { I1, I2, II1, II2 };
enum class ConditionPart { None, P1, P2, P3, P4 };

struct InitialConditionClass {
    ConditionTag tag = ConditionTag::I1;
    ConditionPart part = ConditionPart::None;
    bool operator==(const InitialConditionClass&) const = default;
};

inline const char* to_string(ConditionTag t) {
    switch (t) {
        case ConditionTag::I1: return "i1";
        case ConditionTag::I2: return "i2";
        case ConditionTag::II1: return "ii1";
        case ConditionTag::II2: return "ii2";
    }
    return "?";
}

inline const char* to_string(ConditionPart p) {
    switch (p) {
        case ConditionPart::None: return "-";
        case ConditionPart::P1: return "part1";
        case ConditionPart::P2: return "part2";
        case ConditionPart::P3: return "part3";
        case ConditionPart::P4: return "part4";
    }
    return "?";
}

/// Fixed change of the inertial reference frame: the transformed attitude has
/// eps_hat = eps*eps_v + q.q_v and q_hat = eps_v*q - eps*q_v + q^x q_v.
/// Same algebraic form as the multiplicative error, so all errors are invariant.
inline UnitQuaternion apply_transform(const UnitQuaternion& q, const UnitQuaternion& v) {
    double e;
    Vec3 w;
    detail::mult_error_raw(q.eps, q.vec, v.eps, v.vec, e, w);
    return UnitQuaternion(e, w);
}

/// Undo apply_transform: composing with the conjugate of v recovers the original
/// attitude (up to sign, hence the same physical attitude).
inline UnitQuaternion inverse_transform(const UnitQuaternion& q_hat, const UnitQuaternion& v) {
    double e;
    Vec3 w;
    detail::mult_error_raw(q_hat.eps, q_hat.vec, v.eps, -v.vec, e, w);
    return UnitQuaternion(e, w);
}

/// Classify canonicalized initial attitudes against the root set.
/// Tag: some root in S1 -> II1 (I1 when there are no non-roots); all roots in
/// S2 -> II2 (I2 likewise). For II2 the part is the cross of "does some root
/// have q3 > 0" with "is some non-root in S1".
inline InitialConditionClass classify_initial(const std::vector<UnitQuaternion>& states,
                                              const RootAnalysis& roots) {
    if (states.empty()) throw validation_error("classify_initial: empty state list");
    if (roots.roots.empty()) throw validation_error("classify_initial: empty root set");
    for (size_t i = 0; i < states.size(); ++i) {
        const Subspace s = classify_subspace(states[i]);
        if (s != Subspace::S1 && s != Subspace::S2)
            throw validation_error("classify_initial: attitude of node " +
                                   std::to_string(i + 1) + " is not canonical (S1 u S2)");
    }
    const bool pure_roots = roots.non_roots.empty();
    bool root_in_s1 = false;
    bool root_q3_pos = false;
    for (int i : roots.roots) {
        const UnitQuaternion& q = states[i - 1];
        if (classify_subspace(q) == Subspace::S1) root_in_s1 = true;
        if (q.vec.x3 > kZeroTol) root_q3_pos = true;
    }
    if (root_in_s1)
        return {pure_roots ? ConditionTag::I1 : ConditionTag::II1, ConditionPart::None};

    bool nonroot_in_s1 = false;
    for (int i : roots.non_roots)
        if (classify_subspace(states[i - 1]) == Subspace::S1) nonroot_in_s1 = true;

    InitialConditionClass cls{pure_roots ? ConditionTag::I2 : ConditionTag::II2,
                              ConditionPart::None};
    if (root_q3_pos)
        cls.part = nonroot_in_s1 ? ConditionPart::P2 : ConditionPart::P1;
    else
        cls.part = nonroot_in_s1 ? ConditionPart::P4 : ConditionPart::P3;
    return cls;
}

struct TransformResult {
    UnitQuaternion v;
    InitialConditionClass cls;
    std::vector<UnitQuaternion> transformed_initial;
};

namespace detail {

inline double min_over(const std::vector<double>& xs, double fallback) {
    if (xs.empty()) return fallback;
    return *std::min_element(xs.begin(), xs.end());
}

inline void check_transform_postcondition(TransformResult& r, const RootAnalysis& roots,
                                          const std::vector<UnitQuaternion>& states) {
    r.transformed_initial.clear();
    r.transformed_initial.reserve(states.size());
    for (const UnitQuaternion& q : states)
        r.transformed_initial.push_back(apply_transform(q, r.v));
    double max_root = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < states.size(); ++i) {
        const double e = r.transformed_initial[i].eps;
        if (e < -1e-12)
            throw internal_consistency_error(
                "transform: negative transformed initial scalar at node " +
                std::to_string(i + 1) + " (" + std::to_string(e) + ")");
        if (roots.is_root(static_cast<int>(i) + 1)) max_root = std::max(max_root, e);
    }
    if (!(max_root > 0.0))
        throw internal_consistency_error(
            "transform: no root has positive transformed initial scalar");
}

}  // namespace detail

/// Constructive transform for a pure root network whose states all lie in S2.
inline TransformResult find_transform_roots_only(const std::vector<UnitQuaternion>& states) {
    RootAnalysis all;
    for (size_t i = 0; i < states.size(); ++i) all.roots.push_back(static_cast<int>(i) + 1);

    for (const UnitQuaternion& q : states)
        if (classify_subspace(q) != Subspace::S2)
            throw validation_error("find_transform_roots_only: all states must lie in S2");

    TransformResult r;
    r.cls = {ConditionTag::I2, ConditionPart::None};
    bool any_q3_pos = false;
    bool all_q1_one = true;
    for (const UnitQuaternion& q : states) {
        if (q.vec.x3 > kZeroTol) any_q3_pos = true;
        if (std::abs(q.vec.x1 - 1.0) > kZeroTol) all_q1_one = false;
    }
    if (any_q3_pos)
        r.v = UnitQuaternion(0.0, {0.0, 0.0, 1.0});
    else if (all_q1_one)
        r.v = UnitQuaternion(0.0, {1.0, 0.0, 0.0});
    else
        r.v = UnitQuaternion(0.0, {0.0, 1.0, 0.0});
    detail::check_transform_postcondition(r, all, states);
    return r;
}

/// Construct the frame change that makes every transformed initial scalar part
/// nonnegative with at least one root strictly positive. Inputs must already be
/// canonicalized. Where one of the defining minima would range over an empty
/// set, the corresponding factor collapses to 1, which reduces the construction
/// to the simpler case that actually applies.
inline TransformResult find_transform(const std::vector<UnitQuaternion>& states,
                                      const RootAnalysis& roots) {
    TransformResult r;
    r.cls = classify_initial(states, roots);

    const auto q3_zero = [](const UnitQuaternion& q) { return std::abs(q.vec.x3) <= kZeroTol; };
    const auto eps_zero = [](const UnitQuaternion& q) { return std::abs(q.eps) <= kZeroTol; };

    switch (r.cls.part) {
        case ConditionPart::None:  // i1 / ii1: identity frame already works
            r.v = UnitQuaternion(1.0, {0.0, 0.0, 0.0});
            break;
        case ConditionPart::P1:
            r.v = UnitQuaternion(0.0, {0.0, 0.0, 1.0});
            break;
        case ConditionPart::P2: {
            std::vector<double> set;
            for (int i : roots.non_roots)
                if (states[i - 1].eps > kZeroTol) set.push_back(states[i - 1].eps);
            const double e1 = detail::min_over(set, 1.0);
            r.v = UnitQuaternion(std::sqrt(1.0 - e1 * e1), {0.0, 0.0, e1});
            break;
        }
        case ConditionPart::P3: {
            std::vector<double> s2set, s3set;
            for (size_t i = 0; i < states.size(); ++i)
                if (q3_zero(states[i])) s2set.push_back(states[i].vec.x1);
            for (int i : roots.non_roots)
                if (states[i - 1].vec.x3 > kZeroTol) s3set.push_back(states[i - 1].vec.x3);
            const double e2 = detail::min_over(s2set, 1.0);
            const double e3 = detail::min_over(s3set, 1.0);
            const double a = std::sqrt((1.0 + e2) / 2.0);
            const double b = std::sqrt((1.0 - e2) / 2.0);
            r.v = UnitQuaternion(0.0, {a * e3, b * e3, std::sqrt(1.0 - e3 * e3)});
            break;
        }
        case ConditionPart::P4: {
            std::vector<double> s4set, s5set, s6set;
            for (size_t i = 0; i < states.size(); ++i)
                if (eps_zero(states[i]) && q3_zero(states[i]))
                    s4set.push_back(states[i].vec.x1);
            for (int i : roots.non_roots) {
                const UnitQuaternion& q = states[i - 1];
                if (eps_zero(q) && q.vec.x3 > kZeroTol) s5set.push_back(q.vec.x3);
                if (q.eps > kZeroTol) s6set.push_back(q.eps);
            }
            const double e4 = detail::min_over(s4set, 1.0);
            const double e5 = detail::min_over(s5set, 1.0);
            const double e6 = detail::min_over(s6set, 1.0);  // nonempty in P4
            const double a = std::sqrt((1.0 + e4) / 2.0);
            const double b = std::sqrt((1.0 - e4) / 2.0);
            r.v = UnitQuaternion(std::sqrt(1.0 - e6 * e6),
                                 {a * e5 * e6, b * e5 * e6, std::sqrt(1.0 - e5 * e5) * e6});
            break;
        }
    }
    detail::check_transform_postcondition(r, roots, states);
    return r;
}

}  // namespace attsync

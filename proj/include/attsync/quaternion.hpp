#pragma once

#include <cmath>
#include <string>

#include "attsync/errors.hpp"
#include "attsync/vec3.hpp"

namespace attsync {

/// Tolerance below which a scalar part counts as exactly zero (the S2/S4 boundary).
inline constexpr double kZeroTol = 1e-12;
/// Unit-norm defect up to which a quaternion is accepted as-is.
inline constexpr double kUnityTolStrict = 1e-9;
/// Unit-norm defect up to which a quaternion is silently renormalized; beyond it, rejected.
inline constexpr double kUnityTolReject = 1e-6;

namespace detail {

inline double unity_defect(double eps, const Vec3& vec) {
    return std::abs(eps * eps + dot(vec, vec) - 1.0);
}

// Shared validate-or-renormalize policy for all unit-norm quaternion types.
inline void enforce_unity(double& eps, Vec3& vec, const char* what) {
    if (!std::isfinite(eps) || !is_finite(vec))
        throw validation_error(std::string(what) + ": non-finite components");
    const double defect = unity_defect(eps, vec);
    if (defect > kUnityTolReject)
        throw validation_error(std::string(what) + ": unity defect " + std::to_string(defect) +
                               " exceeds " + std::to_string(kUnityTolReject));
    if (defect > kUnityTolStrict) {
        const double n = std::sqrt(eps * eps + dot(vec, vec));
        eps /= n;
        vec = vec * (1.0 / n);
    }
}

}  // namespace detail

/// Scalar-first unit quaternion (eps, q1, q2, q3) on the three-sphere.
struct UnitQuaternion {
    double eps = 1.0;
    Vec3 vec{};

    UnitQuaternion() = default;
    UnitQuaternion(double e, const Vec3& v) : eps(e), vec(v) {
        detail::enforce_unity(eps, vec, "UnitQuaternion");
    }

    UnitQuaternion operator-() const {
        UnitQuaternion q;
        q.eps = -eps;
        q.vec = -vec;
        return q;
    }
    bool operator==(const UnitQuaternion&) const = default;
};

/// Multiplicative quaternion error of body i with respect to body j.
struct QuatError {
    double eps = 1.0;
    Vec3 vec{};

    QuatError() = default;
    QuatError(double e, const Vec3& v) : eps(e), vec(v) {
        detail::enforce_unity(eps, vec, "QuatError");
    }
};

/// Time derivative of a quaternion (1/s).
struct QuatDeriv {
    double deps = 0.0;
    Vec3 dvec{};
};

inline UnitQuaternion from_axis_angle(const Vec3& axis, double angle) {
    if (std::abs(norm(axis) - 1.0) > kUnityTolStrict)
        throw validation_error("from_axis_angle: axis is not unit length");
    const double h = 0.5 * angle;
    return UnitQuaternion(std::cos(h), axis * std::sin(h));
}

namespace detail {

// Raw error formula usable on not-exactly-unit stage values inside the integrator.
inline void mult_error_raw(double ei, const Vec3& vi, double ej, const Vec3& vj,
                           double& eo, Vec3& vo) {
    eo = ei * ej + dot(vi, vj);
    vo = ej * vi - ei * vj + cross(vi, vj);
}

inline void kinematics_raw(double e, const Vec3& v, const Vec3& omega,
                           double& de, Vec3& dv) {
    de = -0.5 * dot(v, omega);
    dv = 0.5 * (cross(v, omega) + e * omega);
}

}  // namespace detail

inline QuatError mult_error(const UnitQuaternion& qi, const UnitQuaternion& qj) {
    double e;
    Vec3 v;
    detail::mult_error_raw(qi.eps, qi.vec, qj.eps, qj.vec, e, v);
    return QuatError(e, v);
}

inline QuatDeriv kinematics_rhs(const UnitQuaternion& q, const Vec3& omega) {
    QuatDeriv d;
    detail::kinematics_raw(q.eps, q.vec, omega, d.deps, d.dvec);
    return d;
}

enum class Subspace { S1, S2, S3, S4 };

/// Lexicographic positive hemisphere of the two-sphere: x3 > 0, or x3 = 0 and x2 > 0,
/// or x3 = x2 = 0 and x1 > 0. Zeros are taken within kZeroTol.
inline bool in_s_plus(const Vec3& x) {
    if (x.x3 > kZeroTol) return true;
    if (x.x3 < -kZeroTol) return false;
    if (x.x2 > kZeroTol) return true;
    if (x.x2 < -kZeroTol) return false;
    return x.x1 > kZeroTol;
}

inline Subspace classify_subspace(const UnitQuaternion& q) {
    if (q.eps > kZeroTol) return Subspace::S1;
    if (q.eps < -kZeroTol) return Subspace::S3;
    return in_s_plus(q.vec) ? Subspace::S2 : Subspace::S4;
}

/// Map onto the canonical half S1 u S2 that is in one-to-one correspondence with
/// physical attitudes. A scalar part within kZeroTol of zero is snapped to exactly
/// zero and the vector part renormalized before the hemisphere test.
inline UnitQuaternion canonicalize(const UnitQuaternion& q) {
    if (q.eps > kZeroTol) return q;
    if (q.eps < -kZeroTol) return -q;
    Vec3 v = q.vec;
    const double n = norm(v);
    v = v * (1.0 / n);
    if (!in_s_plus(v)) v = -v;
    return UnitQuaternion(0.0, v);
}

/// Direction cosine matrix of a unit quaternion:
/// C(q) = (eps^2 - q.q) I + 2 q q^T - 2 eps q^x.
/// Under this map, C(mult_error(qi, qj)) == C(qi) * C(qj)^T (checked numerically
/// over random samples; the alternative transpose pairing fails).
inline Mat3 rotation_matrix(double eps, const Vec3& q) {
    const double a = eps * eps - dot(q, q);
    Mat3 r;
    const double qs[3] = {q.x1, q.x2, q.x3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = 2.0 * qs[i] * qs[j];
    r.m[0][0] += a;
    r.m[1][1] += a;
    r.m[2][2] += a;
    const Mat3 sk = cross_matrix(q);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] -= 2.0 * eps * sk.m[i][j];
    return r;
}

inline Mat3 rotation_matrix(const UnitQuaternion& q) { return rotation_matrix(q.eps, q.vec); }
inline Mat3 rotation_matrix(const QuatError& q) { return rotation_matrix(q.eps, q.vec); }

}  // namespace attsync

#pragma once

#include <array>
#include <cmath>

namespace attsync {

struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    constexpr Vec3 operator-() const { return {-x1, -x2, -x3}; }
    constexpr Vec3 operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
    constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2,
            a.x3 * b.x1 - a.x1 * b.x3,
            a.x1 * b.x2 - a.x2 * b.x1};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

/// Row-major 3x3 matrix, just enough for the skew operator and rotation oracles.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    constexpr Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x1 + m[0][1] * v.x2 + m[0][2] * v.x3,
                m[1][0] * v.x1 + m[1][1] * v.x2 + m[1][2] * v.x3,
                m[2][0] * v.x1 + m[2][1] * v.x2 + m[2][2] * v.x3};
    }

    constexpr Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    constexpr Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
};

/// Skew-symmetric matrix of the cross-product operator: cross_matrix(x) * y == cross(x, y).
constexpr Mat3 cross_matrix(const Vec3& x) {
    return Mat3{{{{0.0, -x.x3, x.x2},
                  {x.x3, 0.0, -x.x1},
                  {-x.x2, x.x1, 0.0}}}};
}

}  // namespace attsync

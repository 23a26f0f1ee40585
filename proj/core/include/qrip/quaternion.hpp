// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace qrip {

/// Absolute tolerance used for equality/zero tests on quaternions and
/// quaternion matrices throughout the library.
inline constexpr double kQuatTol = 1e-12;

/// A Hamilton quaternion q = a + b*i + c*j + d*k with real components.
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1, ij = -ji = k,
/// jk = -kj = i, ki = -ik = j. It is associative and distributes over
/// addition but does not commute.
struct Quaternion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_, double c_, double d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    /// Real quaternion a + 0i + 0j + 0k.
    static constexpr Quaternion real(double a_) { return {a_, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }

    constexpr double norm_sq() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr bool is_real() const { return b == 0.0 && c == 0.0 && d == 0.0; }

    bool is_zero(double tol = kQuatTol) const {
        return std::fabs(a) <= tol && std::fabs(b) <= tol &&
               std::fabs(c) <= tol && std::fabs(d) <= tol;
    }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        a += r.a; b += r.b; c += r.c; d += r.d;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        a -= r.a; b -= r.b; c -= r.c; d -= r.d;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        a *= s; b *= s; c *= s; d *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
    friend constexpr Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }
    friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }
    friend constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

    /// Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
    }
};

inline constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline constexpr Quaternion qconj(const Quaternion& q) { return q.conj(); }
inline double qnorm(const Quaternion& q) { return q.norm(); }

inline bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = kQuatTol) {
    return (p - q).is_zero(tol);
}

}  // namespace qrip

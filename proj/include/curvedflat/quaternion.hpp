// Copyright (c) 2026 the curvedflat authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <ostream>

#include "curvedflat/errors.hpp"

namespace curvedflat {

using complex = std::complex<double>;

/// Element of the quaternion algebra H, stored as w + x i + y j + z k.
/// Plain immutable value; every operation below returns a new quaternion.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    /// Real scalars embed on the w axis.
    constexpr Quaternion(double real) : w(real) {}

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion QUAT_I{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion QUAT_J{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion QUAT_K{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
constexpr Quaternion operator/(const Quaternion& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product.  i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion& operator+=(Quaternion& a, const Quaternion& b) { return a = a + b; }
constexpr Quaternion& operator-=(Quaternion& a, const Quaternion& b) { return a = a - b; }
constexpr Quaternion& operator*=(Quaternion& a, const Quaternion& b) { return a = a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double real_part(const Quaternion& q) { return q.w; }
constexpr Quaternion imag_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

/// Euclidean dot product of the four components (Re(a conj(b))).
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Cross product of the imaginary parts; for v, w imaginary this is Im(v w).
constexpr Quaternion cross3(const Quaternion& a, const Quaternion& b) {
    return {0.0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// q^{-1} = conj(q)/|q|^2.  Near-zero arguments are refused rather than
/// silently amplified.
inline Quaternion inv(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 <= 1e-24)
        throw near_zero_error("near-zero quaternion", std::sqrt(n2));
    return conj(q) / n2;
}

inline Quaternion normalized(const Quaternion& q) { return q / norm(q); }

/// The model H = { x + y j | x, y complex }.  x carries the (w, i) part,
/// y the (j, k) part; j x = conj(x) j holds for every complex x.
struct ComplexPair {
    complex x;
    complex y;
};

constexpr ComplexPair split(const Quaternion& q) {
    return {complex{q.w, q.x}, complex{q.y, q.z}};
}
constexpr Quaternion join(const ComplexPair& p) {
    return {p.x.real(), p.x.imag(), p.y.real(), p.y.imag()};
}

/// Embed a complex number on the (1, i) axis.
constexpr Quaternion from_complex(const complex& c) { return {c.real(), c.imag(), 0.0, 0.0}; }
constexpr complex to_complex(const Quaternion& q) { return {q.w, q.x}; }

/// The 2x2 complex matrix model: q = x + y j maps to
///   [ x        y       ]
///   [ -conj(y) conj(x) ]
/// which is multiplicative and has det = |q|^2.
using CMat2 = std::array<std::array<complex, 2>, 2>;

inline CMat2 to_cmat(const Quaternion& q) {
    const ComplexPair p = split(q);
    return {{{p.x, p.y}, {-std::conj(p.y), std::conj(p.x)}}};
}

inline Quaternion from_cmat(const CMat2& m) { return join({m[0][0], m[0][1]}); }

inline CMat2 cmat_mul(const CMat2& a, const CMat2& b) {
    CMat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << q.w << " + " << q.x << "i + " << q.y << "j + " << q.z << "k";
}

}  // namespace curvedflat

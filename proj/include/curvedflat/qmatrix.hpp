// Copyright (c) 2026 the curvedflat authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "curvedflat/quaternion.hpp"

namespace curvedflat {

/// Homogeneous coordinate pair in H^2.  H^2 is a *right* vector space:
/// scalars act on the right, matrices on the left, so A(v q) = (A v) q.
struct QVec2 {
    Quaternion v1;
    Quaternion v2;
};

constexpr QVec2 operator+(const QVec2& a, const QVec2& b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
constexpr QVec2 operator-(const QVec2& a, const QVec2& b) { return {a.v1 - b.v1, a.v2 - b.v2}; }
/// Right scalar action v * q.
constexpr QVec2 operator*(const QVec2& v, const Quaternion& q) { return {v.v1 * q, v.v2 * q}; }
constexpr QVec2 operator*(double s, const QVec2& v) { return {s * v.v1, s * v.v2}; }

constexpr double norm_sq(const QVec2& v) { return norm_sq(v.v1) + norm_sq(v.v2); }
inline double norm(const QVec2& v) { return std::sqrt(norm_sq(v)); }

/// 2x2 quaternionic matrix, the endomorphism algebra of H^2.
struct QMat2 {
    Quaternion a11, a12, a21, a22;

    static constexpr QMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr QMat2 diag(const Quaternion& d1, const Quaternion& d2) {
        return {d1, 0.0, 0.0, d2};
    }
};

constexpr QMat2 operator+(const QMat2& a, const QMat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
constexpr QMat2 operator-(const QMat2& a, const QMat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
constexpr QMat2 operator-(const QMat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
constexpr QMat2 operator*(double s, const QMat2& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}
constexpr QMat2 operator*(const QMat2& a, double s) { return s * a; }

/// Row-by-column product; quaternion factor order is preserved.
constexpr QMat2 operator*(const QMat2& a, const QMat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

constexpr QVec2 apply(const QMat2& a, const QVec2& v) {
    return {a.a11 * v.v1 + a.a12 * v.v2, a.a21 * v.v1 + a.a22 * v.v2};
}

/// Conjugate transpose; (AB)* = B* A*.
constexpr QMat2 adjoint(const QMat2& a) {
    return {conj(a.a11), conj(a.a21), conj(a.a12), conj(a.a22)};
}

constexpr QMat2 commutator(const QMat2& a, const QMat2& b) { return a * b - b * a; }

/// Frobenius norm over the 16 real components.
inline double frob_norm(const QMat2& a) {
    return std::sqrt(norm_sq(a.a11) + norm_sq(a.a12) + norm_sq(a.a21) + norm_sq(a.a22));
}

inline double max_entry_norm(const QMat2& a) {
    return std::sqrt(std::max({norm_sq(a.a11), norm_sq(a.a12), norm_sq(a.a21), norm_sq(a.a22)}));
}

/// Study determinant D(A) = det(A* A).  Real, nonnegative, multiplicative,
/// zero exactly on singular matrices.  The two conjugate cross terms of the
/// expansion are folded into a single 2 Re(...).
inline double study_det(const QMat2& a) {
    return norm_sq(a.a11) * norm_sq(a.a22) + norm_sq(a.a12) * norm_sq(a.a21) -
           2.0 * real_part(conj(a.a11) * a.a12 * conj(a.a22) * a.a21);
}

/// D as a function of two column vectors; symmetric, D(v, w q) = |q|^2 D(v, w),
/// and for affine representatives (h1, 1), (h2, 1) equals |h1 - h2|^2.
inline double study_pair(const QVec2& v, const QVec2& w) {
    return study_det({v.v1, w.v1, v.v2, w.v2});
}

inline double study_eps(const QMat2& a) {
    const double scale = std::max(1.0, max_entry_norm(a));
    return 1e-12 * scale * scale * scale * scale;
}

/// Closed-form inverse with prefactor 1/D(A).
inline QMat2 inv(const QMat2& a) {
    const double d = study_det(a);
    if (d <= study_eps(a))
        throw singular_matrix_error("singular matrix", d);
    QMat2 r{norm_sq(a.a22) * conj(a.a11) - conj(a.a21) * a.a22 * conj(a.a12),
            norm_sq(a.a12) * conj(a.a21) - conj(a.a11) * a.a12 * conj(a.a22),
            norm_sq(a.a21) * conj(a.a12) - conj(a.a22) * a.a21 * conj(a.a11),
            norm_sq(a.a11) * conj(a.a22) - conj(a.a12) * a.a11 * conj(a.a21)};
    return r * (1.0 / d);
}

// --- complex 4x4 image ------------------------------------------------------
//
// Replacing each quaternion entry by its 2x2 complex block embeds M(2x2, H)
// into M(4x4, C); det of the image equals the Study determinant.  This is the
// one bridge to commutative determinants and serves as the oracle for D.

using CMat4 = std::array<std::array<complex, 4>, 4>;

inline CMat4 complex_image(const QMat2& a) {
    const CMat2 b11 = to_cmat(a.a11), b12 = to_cmat(a.a12);
    const CMat2 b21 = to_cmat(a.a21), b22 = to_cmat(a.a22);
    CMat4 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m[i][j] = b11[i][j];
            m[i][j + 2] = b12[i][j];
            m[i + 2][j] = b21[i][j];
            m[i + 2][j + 2] = b22[i][j];
        }
    return m;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline complex det4(CMat4 m) {
    complex det{1.0, 0.0};
    for (int c = 0; c < 4; ++c) {
        int pivot = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        if (std::abs(m[pivot][c]) == 0.0) return {0.0, 0.0};
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const complex f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace curvedflat

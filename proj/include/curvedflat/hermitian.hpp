// Copyright (c) 2026 the curvedflat authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <variant>

#include "curvedflat/qmatrix.hpp"

namespace curvedflat {

/// Quaternionic hermitian form on H^2, stored as the matrix
///   [ s11        s12 ]
///   [ conj(s12)  s22 ]
/// with real diagonal.  These forms make a real 6-dimensional vector space;
/// with the Lorentz product below it is the Minkowski space R^6_1 of the
/// classical model: points of HP^1 sit on the light cone, spheres on the
/// unit Lorentz sphere.
struct HermForm {
    double s11 = 0.0;
    double s22 = 0.0;
    Quaternion s12{};
};

constexpr HermForm operator+(const HermForm& a, const HermForm& b) {
    return {a.s11 + b.s11, a.s22 + b.s22, a.s12 + b.s12};
}
constexpr HermForm operator-(const HermForm& a, const HermForm& b) {
    return {a.s11 - b.s11, a.s22 - b.s22, a.s12 - b.s12};
}
constexpr HermForm operator-(const HermForm& a) { return {-a.s11, -a.s22, -a.s12}; }
constexpr HermForm operator*(double c, const HermForm& a) {
    return {c * a.s11, c * a.s22, c * a.s12};
}
constexpr HermForm operator*(const HermForm& a, double c) { return c * a; }
constexpr HermForm& operator+=(HermForm& a, const HermForm& b) { return a = a + b; }
constexpr HermForm& operator-=(HermForm& a, const HermForm& b) { return a = a - b; }

/// Euclidean norm of the form as a 6-vector (scale gauge for residuals).
inline double norm(const HermForm& s) {
    return std::sqrt(s.s11 * s.s11 + s.s22 * s.s22 + 2.0 * norm_sq(s.s12));
}

/// det(s) = s11 s22 - |s12|^2 (well defined for self-adjoint matrices).
constexpr double herm_det(const HermForm& s) { return s.s11 * s.s22 - norm_sq(s.s12); }

/// Lorentz product: the symmetric bilinear polarization of -det, so that
/// lorentz(s, s) = |s12|^2 - s11 s22 exactly.  Signature (5,1).
constexpr double lorentz(const HermForm& s, const HermForm& t) {
    return dot(s.s12, t.s12) - 0.5 * (s.s11 * t.s22 + s.s22 * t.s11);
}

/// s(v, v) = s11 |v1|^2 + 2 Re(conj(v1) s12 v2) + s22 |v2|^2.
constexpr double form_eval(const HermForm& s, const QVec2& v) {
    return s.s11 * norm_sq(v.v1) + 2.0 * real_part(conj(v.v1) * s.s12 * v.v2) +
           s.s22 * norm_sq(v.v2);
}

/// The quaternion-valued sesquilinear evaluation s(v, w).
constexpr Quaternion form_pair(const HermForm& s, const QVec2& v, const QVec2& w) {
    return conj(v.v1) * (s.s11 * w.v1) + conj(v.v1) * (s.s12 * w.v2) +
           conj(v.v2) * (conj(s.s12) * w.v1) + conj(v.v2) * (s.s22 * w.v2);
}

/// Light-cone embedding of a projective point: the null form annihilating
/// exactly the direction v H.  Scales by |q|^2 under v -> v q, so the null
/// line is projectively well defined.
inline HermForm point_to_form(const QVec2& v) {
    if (norm_sq(v) == 0.0)
        throw precondition_error("not a projective point: zero homogeneous vector");
    return {norm_sq(v.v2), norm_sq(v.v1), -(v.v1 * conj(v.v2))};
}

/// Pullback action (A, s) -> A* s A; it eats A-images, so the induced map on
/// points is by A^{-1}.  det scales by the Study determinant of A.
inline HermForm form_act(const QMat2& a, const HermForm& s) {
    // S = A* M A with M the hermitian matrix of s.
    const Quaternion m11 = s.s11 * a.a11 + s.s12 * a.a21;
    const Quaternion m12 = s.s11 * a.a12 + s.s12 * a.a22;
    const Quaternion m21 = conj(s.s12) * a.a11 + s.s22 * a.a21;
    const Quaternion m22 = conj(s.s12) * a.a12 + s.s22 * a.a22;
    const Quaternion r11 = conj(a.a11) * m11 + conj(a.a21) * m21;
    const Quaternion r12 = conj(a.a11) * m12 + conj(a.a21) * m22;
    const Quaternion r22 = conj(a.a12) * m12 + conj(a.a22) * m22;
    return {real_part(r11), real_part(r22), r12};
}

/// Edge increment of the ambient derivative of a form s whose frame image
/// F s = S is constant: F ds = -(S Phi + Phi* S).  The result is hermitian
/// again and is reassembled as a HermForm.
inline HermForm form_derivative(const HermForm& fs_const, const QMat2& phi_edge) {
    const HermForm& s = fs_const;
    const Quaternion r11 = s.s11 * phi_edge.a11 + s.s12 * phi_edge.a21 +
                           conj(phi_edge.a11) * s.s11 + conj(phi_edge.a21) * conj(s.s12);
    const Quaternion r12 = s.s11 * phi_edge.a12 + s.s12 * phi_edge.a22 +
                           conj(phi_edge.a11) * s.s12 + conj(phi_edge.a21) * s.s22;
    const Quaternion r22 = conj(s.s12) * phi_edge.a12 + s.s22 * phi_edge.a22 +
                           conj(phi_edge.a12) * s.s12 + conj(phi_edge.a22) * s.s22;
    return {-real_part(r11), -real_part(r22), -r12};
}

// --- spheres and planes ------------------------------------------------------

/// Plane { h : <h, n> = d } in Euclidean 4-space, |n| = 1.
struct PlaneSpec {
    Quaternion normal;
    double distance = 0.0;
};

/// Round sphere with center m and radius r > 0.
struct RoundSphereSpec {
    Quaternion center;
    double radius = 1.0;
};

using SphereSpec = std::variant<PlaneSpec, RoundSphereSpec>;

/// Unit spacelike form of a sphere or plane, normalized to -det = 1:
///   plane:  [ 0, -n; -conj(n), 2d ]
///   sphere: (1/r) [ 1, -m; -conj(m), |m|^2 - r^2 ]
inline HermForm sphere_to_form(const SphereSpec& spec) {
    if (const auto* p = std::get_if<PlaneSpec>(&spec)) {
        const double n = norm(p->normal);
        if (std::abs(n - 1.0) > 1e-12)
            throw precondition_error("plane normal must be unit", n);
        return {0.0, 2.0 * p->distance, -p->normal};
    }
    const auto& s = std::get<RoundSphereSpec>(spec);
    if (!(s.radius > 0.0)) throw precondition_error("sphere radius must be positive", s.radius);
    const double inv_r = 1.0 / s.radius;
    return {inv_r, inv_r * (norm_sq(s.center) - s.radius * s.radius), inv_r * (-s.center)};
}

inline constexpr double EPS_PLANE = 1e-10;

/// Inverse of sphere_to_form.  Spacelike input required; it is rescaled to
/// -det = 1 first, then the s11 -> 0 limit selects the plane branch.
inline SphereSpec form_to_sphere(const HermForm& s) {
    const double q = -herm_det(s);
    if (q <= 0.0)
        throw precondition_error("not a sphere form (timelike or null)", q);
    HermForm t = s * (1.0 / std::sqrt(q));
    if (std::abs(t.s11) < EPS_PLANE * norm(t)) {
        return PlaneSpec{-t.s12, 0.5 * t.s22};
    }
    if (t.s11 < 0.0) t = -t;  // radius is positive by convention
    const double r = 1.0 / t.s11;
    const Quaternion m = -(r * t.s12);
    return RoundSphereSpec{m, r};
}

}  // namespace curvedflat

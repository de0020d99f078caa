// Copyright (c) 2026 the curvedflat authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace curvedflat {

/// Base class for every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion of a quaternion or matrix that is numerically singular.
/// `magnitude` carries |q| or the Study determinant of the offender.
struct near_zero_error : error {
    near_zero_error(const std::string& what, double magnitude_)
        : error(what + " (magnitude " + std::to_string(magnitude_) + ")"),
          magnitude(magnitude_) {}
    double magnitude;
};

struct singular_matrix_error : near_zero_error {
    using near_zero_error::near_zero_error;
};

/// Projective operations applied at the point at infinity.
struct point_at_infinity_error : error {
    using error::error;
};

/// Two grid quantities do not share a domain.
struct domain_mismatch_error : error {
    using error::error;
};

/// Position-carrying failure inside a grid sweep (frame degeneration,
/// singular gauge, Goursat singularity, pole in domain, ...).
struct grid_error : error {
    grid_error(const std::string& what, int i_, int j_)
        : error(what + " at (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
    int i;
    int j;
};

/// Input data fails a geometric precondition (not isothermic, not
/// holomorphic enough, degenerate quadruple, ...).  `detail` carries the
/// measured diagnostic.
struct precondition_error : error {
    precondition_error(const std::string& what, double detail_ = 0.0)
        : error(what), detail(detail_) {}
    double detail;
};

}  // namespace curvedflat

// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "qorder/exact.hpp"

namespace qorder {

//! Algebraic root (p + branch*sqrt(d)) / den with integer entries, den > 0
//! and d >= 0. Values are exact for any binary-floating input because the
//! owning quadratic was scaled to integers first.
struct ExactRoot {
  mpz_class p, d, den;
  int branch;  // -1 or +1
};

ExactRoot exact_root(const IntQuadratic& q, RootSelector which);

//! Exact three-valued sign of e1 - e2. Denominators are cleared and the two
//! radicals removed by at most two squarings; no rounding anywhere.
int exact_sign_diff(const ExactRoot& e1, const ExactRoot& e2);

//! Exact signs of all four root-pair differences between two quadratics,
//! ordered (lo-lo, lo-hi, hi-lo, hi-hi). Throws NoRealRoots when an exact
//! discriminant is negative, which flags that a storage-precision screen
//! admitted a phantom intersection.
std::array<int, 4> exact_order_all(const IntQuadratic& q1, const IntQuadratic& q2);
std::array<int, 4> exact_order_all(const Quadratic& q1, const Quadratic& q2);

}  // namespace qorder

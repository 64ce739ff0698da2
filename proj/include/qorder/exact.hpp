// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include "qorder/core_types.hpp"

namespace qorder {

//! Quadratic with integer coefficients obtained by scaling a binary-floating
//! quadratic by a power of two and normalizing the leading coefficient
//! positive. Both transformations leave the roots (and so every root-order
//! question) unchanged, and all later arithmetic is over integers with no
//! rounding anywhere.
struct IntQuadratic {
  mpz_class a, b, c;

  mpz_class disc() const { return b * b - 4 * a * c; }
};

//! Exact integer form of a quadratic; throws DegenerateQuadratic if a == 0.
IntQuadratic to_integer(const Quadratic& q);

inline int sgn(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

//! Exact sign of x0 + s*sqrt(d) for integers with d >= 0 (one squaring).
int sign_with_radical(const mpz_class& x0, const mpz_class& s, const mpz_class& d);

//! Exact sign of x0 + s1*sqrt(d1) + s2*sqrt(d2), d1, d2 >= 0 (at most two
//! squarings with case analysis on intermediate signs).
int sign_with_two_radicals(const mpz_class& x0, const mpz_class& s1, const mpz_class& d1,
                           const mpz_class& s2, const mpz_class& d2);

}  // namespace qorder

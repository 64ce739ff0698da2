// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for unit and acceptance tests: fixed-point input
// generators and the independent exact-arithmetic oracles (cofactor
// determinant, integer minors) the library results are checked against.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <random>

#include "qorder/core_types.hpp"
#include "qorder/exact.hpp"

namespace qorder::test {

inline float fixed_point(std::mt19937_64& rng, int w) {
  const auto span = 1LL << w;
  const long long k = static_cast<long long>(rng() % (2 * span)) - span;
  return std::ldexp(static_cast<float>(k), -w);
}

inline Quadric random_quadric(std::mt19937_64& rng, int w) {
  Quadric q;
  q.xx = fixed_point(rng, w);
  q.xy = fixed_point(rng, w);
  q.xz = fixed_point(rng, w);
  q.yy = fixed_point(rng, w);
  q.yz = fixed_point(rng, w);
  q.zz = fixed_point(rng, w);
  q.x = fixed_point(rng, w);
  q.y = fixed_point(rng, w);
  q.z = fixed_point(rng, w);
  q.c = fixed_point(rng, w);
  return q;
}

inline LineSegment random_line(std::mt19937_64& rng, int w) {
  LineSegment l;
  l.origin = {fixed_point(rng, w), fixed_point(rng, w), fixed_point(rng, w)};
  do {
    l.dir = {fixed_point(rng, w), fixed_point(rng, w), fixed_point(rng, w)};
  } while (l.dir.x == 0 && l.dir.y == 0 && l.dir.z == 0);
  return l;
}

//! Quadratic derived from w-bit scene data, with a real-roots filter.
inline Quadratic random_derived_quadratic(std::mt19937_64& rng, int w, bool want_real) {
  for (;;) {
    const Quadratic q = substitute(random_line(rng, w), random_quadric(rng, w));
    if (q.a == 0.0) continue;
    if (!want_real) return q;
    const IntQuadratic iq = to_integer(q);
    if (sgn(iq.disc()) >= 0) return q;
  }
}

//! Generic cofactor-expansion determinant of a 4x4 integer matrix; the
//! verification side of the Sylvester identity, independent of the minors
//! shortcut it checks.
inline mpz_class det4(const std::array<std::array<mpz_class, 4>, 4>& m) {
  const auto det3 = [](const mpz_class& a, const mpz_class& b, const mpz_class& c,
                       const mpz_class& d, const mpz_class& e, const mpz_class& f,
                       const mpz_class& g, const mpz_class& h, const mpz_class& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  };
  mpz_class out = 0;
  for (int col = 0; col < 4; ++col) {
    std::array<mpz_class, 9> s;
    int k = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) s[static_cast<std::size_t>(k++)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    const mpz_class minor = det3(s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]);
    const mpz_class term = m[0][static_cast<std::size_t>(col)] * minor;
    out += (col % 2 == 0) ? term : -term;
  }
  return out;
}

//! Sylvester matrix determinant of two quadratics, exact.
inline mpz_class sylvester_det(const IntQuadratic& p, const IntQuadratic& q) {
  const mpz_class z = 0;
  return det4({{{p.a, p.b, p.c, z}, {z, p.a, p.b, p.c}, {q.a, q.b, q.c, z}, {z, q.a, q.b, q.c}}});
}

//! The minors evaluation of the same determinant, exact.
inline mpz_class delta_int(const IntQuadratic& p, const IntQuadratic& q) {
  const mpz_class a1 = p.a * p.a, g1 = p.c * p.c, d1 = p.a * p.b, e1 = p.a * p.c,
                  z1 = p.b * p.c, dd1 = p.b * p.b - e1;
  const mpz_class a2 = q.a * q.a, g2 = q.c * q.c, d2 = q.a * q.b, e2 = q.a * q.c,
                  z2 = q.b * q.c, dd2 = q.b * q.b - e2;
  return a1 * g2 + g1 * a2 + dd1 * e2 + e1 * dd2 - z1 * d2 - d1 * z2;
}

}  // namespace qorder::test

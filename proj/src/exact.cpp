// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/exact.hpp"

#include <cmath>

namespace qorder {

namespace {

// Smallest left-shift making v integral is bounded by 52 - ilogb(v); the
// scaled value then fits a double's significand, so mpz_set_d is exact.
mpz_class mantissa_int(double v, int shift_left) {
  mpz_class m;
  const double scaled = std::scalbn(v, 52 - binary_exponent(v));
  mpz_set_d(m.get_mpz_t(), scaled);
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift_left));
  return m;
}

}  // namespace

IntQuadratic to_integer(const Quadratic& q) {
  if (q.a == 0.0) throw DegenerateQuadratic{};

  int k = 0;  // common scale 2^k, large enough for every nonzero coefficient
  bool any = false;
  for (double v : {q.a, q.b, q.c}) {
    if (v == 0.0) continue;
    k = any ? std::max(k, 52 - binary_exponent(v)) : 52 - binary_exponent(v);
    any = true;
  }

  IntQuadratic out;
  auto shifted = [&](double v) -> mpz_class {
    if (v == 0.0) return mpz_class(0);
    return mantissa_int(v, k - (52 - binary_exponent(v)));
  };
  out.a = shifted(q.a);
  out.b = shifted(q.b);
  out.c = shifted(q.c);
  if (sgn(out.a) < 0) {
    out.a = -out.a;
    out.b = -out.b;
    out.c = -out.c;
  }
  return out;
}

int sign_with_radical(const mpz_class& x0, const mpz_class& s, const mpz_class& d) {
  const int sx = sgn(x0);
  const int sr = sgn(d) == 0 ? 0 : sgn(s);
  if (sr == 0) return sx;
  if (sx == 0) return sr;
  if (sx == sr) return sx;
  // Opposite signs: square both sides once.
  const mpz_class k = x0 * x0 - s * s * d;
  return sx * sgn(k);
}

int sign_with_two_radicals(const mpz_class& x0, const mpz_class& s1, const mpz_class& d1,
                           const mpz_class& s2, const mpz_class& d2) {
  const int left = sign_with_radical(x0, s1, d1);  // sign of x0 + s1*sqrt(d1)
  const int right = sgn(d2) == 0 ? 0 : sgn(s2);    // sign of s2*sqrt(d2)
  if (right == 0) return left;
  if (left == 0) return right;
  if (left == right) return left;
  // |x0 + s1*sqrt(d1)| vs |s2*sqrt(d2)|: squaring leaves one radical.
  const mpz_class y0 = x0 * x0 + s1 * s1 * d1 - s2 * s2 * d2;
  const mpz_class u = 2 * x0 * s1;
  return left * sign_with_radical(y0, u, d1);
}

}  // namespace qorder

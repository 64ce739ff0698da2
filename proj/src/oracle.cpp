// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/oracle.hpp"

namespace qorder {

ExactRoot exact_root(const IntQuadratic& q, RootSelector which) {
  if (sgn(q.a) == 0) throw DegenerateQuadratic{};
  ExactRoot r;
  r.d = q.disc();
  if (sgn(r.d) < 0) throw NoRealRoots{};
  r.p = -q.b;
  r.den = 2 * q.a;  // positive: IntQuadratic normalizes a > 0
  r.branch = (which == RootSelector::Lo) ? -1 : +1;
  return r;
}

int exact_sign_diff(const ExactRoot& e1, const ExactRoot& e2) {
  // e1 - e2 = [p1*den2 - p2*den1 + b1*den2*sqrt(d1) - b2*den1*sqrt(d2)]
  //           / (den1*den2), and den1*den2 > 0.
  const mpz_class x0 = e1.p * e2.den - e2.p * e1.den;
  const mpz_class s1 = e1.branch * e2.den;
  const mpz_class s2 = -e2.branch * e1.den;
  return sign_with_two_radicals(x0, s1, e1.d, s2, e2.d);
}

std::array<int, 4> exact_order_all(const IntQuadratic& q1, const IntQuadratic& q2) {
  const ExactRoot r1lo = exact_root(q1, RootSelector::Lo);
  const ExactRoot r1hi = exact_root(q1, RootSelector::Hi);
  const ExactRoot r2lo = exact_root(q2, RootSelector::Lo);
  const ExactRoot r2hi = exact_root(q2, RootSelector::Hi);
  return {exact_sign_diff(r1lo, r2lo), exact_sign_diff(r1lo, r2hi),
          exact_sign_diff(r1hi, r2lo), exact_sign_diff(r1hi, r2hi)};
}

std::array<int, 4> exact_order_all(const Quadratic& q1, const Quadratic& q2) {
  return exact_order_all(to_integer(q1), to_integer(q2));
}

}  // namespace qorder

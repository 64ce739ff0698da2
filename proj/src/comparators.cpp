// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/comparators.hpp"

#include <cassert>
#include <cmath>

namespace qorder {

int approx_compare(Storage r1, Storage r2, OpCount* ops) {
  const Storage d = r1 - r2;
  tick(ops);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

ExtendedRoots extended_roots(const Quadratic& q, const PrecisionSchedule& sched, OpCount* ops) {
  if (q.a == 0.0) throw DegenerateQuadratic{};
  const mpfr_prec_t pd = sched.disc_bits();
  const mpfr_prec_t ps = sched.sqrt_bits();
  const mpfr_prec_t pv = sched.div_bits();

  const BigFloat a(q.a, pd), b(q.b, pd), c(q.c, pd);

  // Discriminant stage.
  const BigFloat b2 = bf_mul(b, b, pd, ops);
  const BigFloat ac = bf_mul(a, c, pd, ops);
  const BigFloat ac4 = bf_mul_si(4, ac, pd, ops);
  const BigFloat disc = bf_sub(b2, ac4, pd, ops);
  if (disc.sgn() < 0) throw NoRealRoots{};

  // Square root and the cancellation-free addition.
  const BigFloat s = bf_sqrt(disc, ps, ops);
  const BigFloat sb = bf_mul_si(q.b < 0.0 ? -1 : 1, s, ps, ops);
  const BigFloat t = bf_add(BigFloat(q.b, ps), sb, ps, ops);
  const BigFloat u = bf_neg(t, ps, ops);

  // Division stage.
  const BigFloat a2 = bf_mul_si(2, BigFloat(q.a, pv), pv, ops);
  const BigFloat r1 = bf_div(u, a2, pv, ops);
  BigFloat r2 = r1;
  if (u.sgn() != 0) {
    const BigFloat c2 = bf_mul_si(2, BigFloat(q.c, pv), pv, ops);
    r2 = bf_div(c2, u, pv, ops);
  }

  ExtendedRoots out{BigFloat(pv), BigFloat(pv)};
  if (bf_cmp(r1, r2) <= 0) {
    out.lo = r1;
    out.hi = r2;
  } else {
    out.lo = r2;
    out.hi = r1;
  }
  return out;
}

int extended_compare(const ExtendedRoots& r1, RootSelector s1, const ExtendedRoots& r2,
                     RootSelector s2, const PrecisionSchedule& sched) {
  const BigFloat& x = s1 == RootSelector::Lo ? r1.lo : r1.hi;
  const BigFloat& y = s2 == RootSelector::Lo ? r2.lo : r2.hi;
  const BigFloat d = bf_sub(x, y, sched.div_bits());
  return d.sgn();
}

int extended_compare(const Quadratic& q1, RootSelector s1, const Quadratic& q2, RootSelector s2,
                     const PrecisionSchedule& sched) {
  const ExtendedRoots r1 = extended_roots(q1, sched);
  const ExtendedRoots r2 = extended_roots(q2, sched);
  return extended_compare(r1, s1, r2, s2, sched);
}

Minors precompute_minors(const Quadratic& q, mpfr_prec_t prec, OpCount* ops) {
  const BigFloat a(q.a, prec), b(q.b, prec), c(q.c, prec);
  Minors m(prec);
  const BigFloat bb = bf_mul(b, b, prec, ops);
  m.alpha = bf_mul(a, a, prec, ops);
  m.gamma = bf_mul(c, c, prec, ops);
  m.delta = bf_mul(a, b, prec, ops);
  m.eps = bf_mul(a, c, prec, ops);
  m.zeta = bf_mul(b, c, prec, ops);
  m.d = bf_sub(bb, m.eps, prec, ops);
  return m;
}

BigFloat resultant_delta(const Minors& m1, const Minors& m2, OpCount* ops) {
  const mpfr_prec_t p = m1.prec;
  const BigFloat t1 = bf_mul(m1.alpha, m2.gamma, p, ops);
  const BigFloat t2 = bf_mul(m1.gamma, m2.alpha, p, ops);
  const BigFloat t3 = bf_mul(m1.d, m2.eps, p, ops);
  const BigFloat t4 = bf_mul(m1.eps, m2.d, p, ops);
  const BigFloat t5 = bf_mul(m1.zeta, m2.delta, p, ops);
  const BigFloat t6 = bf_mul(m1.delta, m2.zeta, p, ops);
  BigFloat s = bf_add(t1, t2, p, ops);
  s = bf_add(s, t3, p, ops);
  s = bf_add(s, t4, p, ops);
  s = bf_sub(s, t5, p, ops);
  s = bf_sub(s, t6, p, ops);
  return s;
}

KnownSigns known_from_signs(const std::array<int, 4>& all, RootSelector s1, RootSelector s2) {
  KnownSigns k;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == static_cast<int>(s1) && j == static_cast<int>(s2)) continue;
      k.sign[i][j] = all[static_cast<std::size_t>(i * 2 + j)];
    }
  }
  return k;
}

int resultant_compare(RootSelector s1, RootSelector s2, const KnownSigns& known, const Minors& m1,
                      const Minors& m2, OpCount* ops) {
  int negatives = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == static_cast<int>(s1) && j == static_cast<int>(s2)) continue;
      const auto& s = known.sign[i][j];
      if (!s.has_value()) throw ContractViolation("resultant_compare: missing known pair sign");
      if (*s == 0) throw KnownSignZero{};
      if (*s < 0) ++negatives;
    }
  }
  const BigFloat delta = resultant_delta(m1, m2, ops);
  const int sd = delta.sgn();
  if (sd == 0) return 0;
  return (negatives % 2 == 0) ? sd : -sd;
}

int midpoint_side_test(const Quadratic& q1, RootSelector s1, const Quadratic& q2) {
  const IntQuadratic i1 = to_integer(q1);
  const IntQuadratic i2 = to_integer(q2);
  const mpz_class d1 = i1.disc();
  if (sgn(d1) < 0) throw NoRealRoots{};
  // r1 - (-b2/(2 a2)) = [a1 b2 - a2 b1 + eps*a2*sqrt(d1)] / (2 a1 a2),
  // with both leading coefficients normalized positive.
  const mpz_class u = i1.a * i2.b - i2.a * i1.b;
  const mpz_class s = (s1 == RootSelector::Hi ? 1 : -1) * i2.a;
  return sign_with_radical(u, s, d1);
}

namespace {

// Vertex-delimited interval on the axis -inf < x1 < x2 < +inf, with ranks
// 0 = -inf, 1 = x1, 2 = x2, 3 = +inf.
struct Bracket {
  int lo_rank, hi_rank;
  bool lo_open, hi_open;

  static Bracket point(int r) { return {r, r, false, false}; }
  static Bracket open(int lo, int hi) { return {lo, hi, true, true}; }
  bool is_point() const { return lo_rank == hi_rank && !lo_open && !hi_open; }
};

std::optional<int> bracket_compare(const Bracket& a, const Bracket& b) {
  if (a.hi_rank < b.lo_rank) return -1;
  if (b.hi_rank < a.lo_rank) return +1;
  if (a.hi_rank == b.lo_rank && (a.hi_open || b.lo_open)) return -1;
  if (b.hi_rank == a.lo_rank && (b.hi_open || a.lo_open)) return +1;
  if (a.is_point() && b.is_point() && a.lo_rank == b.lo_rank) return 0;
  return std::nullopt;
}

// Both vertices coincide: scaled squared discriminants settle every pair.
ResolvedOrder resolve_same_vertex(const mpz_class& d1, const mpz_class& d2, const IntQuadratic& q1,
                                  const IntQuadratic& q2) {
  ResolvedOrder out;
  const mpz_class k = d1 * q2.a * q2.a - d2 * q1.a * q1.a;
  const int sk = sgn(k);
  int four[4];
  if (sk > 0) {
    four[0] = -1, four[1] = -1, four[2] = +1, four[3] = +1;  // q1 strictly contains q2
  } else if (sk < 0) {
    four[0] = +1, four[1] = -1, four[2] = +1, four[3] = -1;  // q2 strictly contains q1
  } else {
    const int e = sgn(d1) > 0 ? 1 : 0;  // identical root sets
    four[0] = 0, four[1] = -e, four[2] = +e, four[3] = 0;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.known.sign[i][j] = four[i * 2 + j];
  return out;
}

// Main branch: quadratic 1's vertex strictly left of quadratic 2's.
ResolvedOrder resolve_ordered(const IntQuadratic& q1, const IntQuadratic& q2, const mpz_class& d1,
                              const mpz_class& d2) {
  // Signs of each quadratic at the other's vertex, denominators cleared:
  // 4 a2^2 P(x2) and 4 a1^2 Q(x1).
  const int sp2 = sgn(mpz_class(q1.a * q2.b * q2.b - 2 * q2.a * q1.b * q2.b + 4 * q2.a * q2.a * q1.c));
  const int sq1 = sgn(mpz_class(q2.a * q1.b * q1.b - 2 * q1.a * q1.b * q2.b + 4 * q1.a * q1.a * q2.c));
  const bool tangent1 = sgn(d1) == 0;
  const bool tangent2 = sgn(d2) == 0;

  const Bracket r1lo = tangent1 ? Bracket::point(1) : Bracket::open(0, 1);
  const Bracket r1hi = tangent1 ? Bracket::point(1)
                       : sp2 > 0 ? Bracket::open(1, 2)
                       : sp2 == 0
                           ? Bracket{1, 2, true, false}  // right end attainable
                           : Bracket::open(2, 3);
  const Bracket r2lo = tangent2 ? Bracket::point(2)
                       : sq1 > 0 ? Bracket::open(1, 2)
                       : sq1 == 0
                           ? Bracket{1, 2, false, true}  // left end attainable
                           : Bracket::open(0, 1);
  const Bracket r2hi = tangent2 ? Bracket::point(2) : Bracket::open(2, 3);

  const Bracket first[2] = {r1lo, r1hi};
  const Bracket second[2] = {r2lo, r2hi};

  ResolvedOrder out;
  int open_pairs = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto s = bracket_compare(first[i], second[j]);
      if (s.has_value()) {
        out.known.sign[i][j] = *s;
      } else {
        ++open_pairs;
        out.ambiguous = {static_cast<RootSelector>(i), static_cast<RootSelector>(j)};
      }
    }
  }

  // Squared-discriminant refinement for the same-side pairs. With
  // x1 < x2, r1^s - r2^s = (x1 - x2) +- (h1 - h2) where h_i is the root
  // half-spread sqrt(d_i)/(2 a_i); comparing h1 with h2 through
  // d1 a2^2 vs d2 a1^2 decides the pair whenever both contributions pull
  // the same way. At most one same-side pair survives this.
  if (open_pairs > 0) {
    const int sh = sgn(mpz_class(d1 * q2.a * q2.a - d2 * q1.a * q1.a));
    const auto refine = [&](RootSelector sel, int spread_sign) {
      const int i = static_cast<int>(sel);
      if (out.known.sign[i][i].has_value()) return;
      if (spread_sign <= 0) {  // both terms nonpositive, vertex term strict
        out.known.sign[i][i] = -1;
        --open_pairs;
      }
    };
    refine(RootSelector::Lo, -sh);
    refine(RootSelector::Hi, sh);
    if (open_pairs > 0) {
      out.ambiguous.reset();
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (!out.known.sign[i][j].has_value())
            out.ambiguous = {static_cast<RootSelector>(i), static_cast<RootSelector>(j)};
    } else {
      out.ambiguous.reset();
    }
  }
  if (open_pairs > 1) throw MoreThanOneAmbiguousPair{};
  return out;
}

ResolvedOrder transpose(const ResolvedOrder& in) {
  ResolvedOrder out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& s = in.known.sign[j][i];
      if (s.has_value()) out.known.sign[i][j] = -*s;
    }
  }
  if (in.ambiguous.has_value()) out.ambiguous = {in.ambiguous->second, in.ambiguous->first};
  return out;
}

}  // namespace

ResolvedOrder resolve_known_pairs(const IntQuadratic& q1, const IntQuadratic& q2) {
  const mpz_class d1 = q1.disc();
  const mpz_class d2 = q2.disc();
  if (sgn(d1) < 0 || sgn(d2) < 0) throw NoRealRoots{};

  // sign(x1 - x2) = sign(a1 b2 - a2 b1) with positive leading coefficients.
  const mpz_class u = q1.a * q2.b - q2.a * q1.b;
  const int su = sgn(u);
  if (su == 0) return resolve_same_vertex(d1, d2, q1, q2);
  if (su < 0) return resolve_ordered(q1, q2, d1, d2);
  return transpose(resolve_ordered(q2, q1, d2, d1));
}

ResolvedOrder resolve_known_pairs(const Quadratic& q1, const Quadratic& q2) {
  return resolve_known_pairs(to_integer(q1), to_integer(q2));
}

int repeated_squaring_compare(const Quadratic& q1, RootSelector s1, const Quadratic& q2,
                              RootSelector s2, const KnownSigns& cross, const Minors& m1,
                              const Minors& m2, OpCount* ops) {
  if (q1.a == 0.0 || q2.a == 0.0) throw DegenerateQuadratic{};
  const mpfr_prec_t p = m1.prec;
  const BigFloat a1(q1.a, p), b1(q1.b, p);
  const BigFloat a2(q2.a, p), b2(q2.b, p);
  // Radical branch selecting root s1: the +sqrt branch is the larger root
  // only when the leading coefficient is positive.
  const int eps = (s1 == RootSelector::Hi ? 1 : -1) * (q1.a < 0.0 ? -1 : 1);

  // Non-radical part of the final expression, term by term:
  // T = a2^2 b1^2 - 2 a1 a2^2 c1 + 2 a1^2 a2 c2 - a1 a2 b1 b2.
  const BigFloat w = bf_mul(b1, b1, p, ops);
  const BigFloat t1 = bf_mul(m2.alpha, w, p, ops);
  const BigFloat t2 = bf_mul(m2.alpha, m1.eps, p, ops);
  const BigFloat t3 = bf_mul_si(2, t2, p, ops);
  const BigFloat t4 = bf_mul(m1.alpha, m2.eps, p, ops);
  const BigFloat t5 = bf_mul_si(2, t4, p, ops);
  const BigFloat t6 = bf_mul(m1.delta, m2.delta, p, ops);
  const BigFloat u1 = bf_sub(t1, t3, p, ops);
  const BigFloat u2 = bf_add(u1, t5, p, ops);
  const BigFloat tt = bf_sub(u2, t6, p, ops);

  // Vertex-side quantities shared by the cross-sign check and the radical.
  const BigFloat v1 = bf_mul(a1, b2, p, ops);
  const BigFloat v2 = bf_mul(a2, b1, p, ops);
  const BigFloat uu = bf_sub(v1, v2, p, ops);  // a1 b2 - a2 b1
  const BigFloat usq = bf_mul(uu, uu, p, ops);
  const BigFloat e13 = bf_mul_si(3, m1.eps, p, ops);
  const BigFloat dsc1 = bf_sub(m1.d, e13, p, ops);  // b1^2 - 4 a1 c1
  const BigFloat pm = bf_mul(m2.alpha, dsc1, p, ops);
  const BigFloat gmid = bf_sub(usq, pm, p, ops);  // u^2 - a2^2 disc1

  // Radical coefficient and the isolate-and-square comparison.
  const BigFloat uq = bf_mul(a2, uu, p, ops);  // a1 a2 b2 - a2^2 b1
  const BigFloat q2r = bf_mul(uq, uq, p, ops);
  const BigFloat rad = bf_mul(q2r, dsc1, p, ops);
  const BigFloat tsq = bf_mul(tt, tt, p, ops);
  const BigFloat fin = bf_sub(tsq, rad, p, ops);
  const BigFloat e23 = bf_mul_si(3, m2.eps, p, ops);
  const BigFloat dsc2 = bf_sub(m2.d, e23, p, ops);  // b2^2 - 4 a2 c2

  if (dsc1.sgn() < 0 || dsc2.sgn() < 0) throw NoRealRoots{};

  const auto chi_opt = cross.get(s1, other(s2));
  if (!chi_opt.has_value())
    throw ContractViolation("repeated_squaring_compare: conjugate pair sign missing");
  const int chi = *chi_opt;

  // Verify the supplied conjugate sign against the vertex test
  // sign(r1 - x2) = sign(a1 a2) * sign(u + eps*a2*sqrt(disc1)).
  const int sa1 = q1.a < 0.0 ? -1 : 1;
  const int sa2 = q2.a < 0.0 ? -1 : 1;
  {
    const int s_u = uu.sgn();
    const int s_rad = dsc1.sgn() > 0 ? eps * sa2 : 0;
    int inner;
    if (s_rad == 0) {
      inner = s_u;
    } else if (s_u == 0 || s_u == s_rad) {
      inner = s_rad;
    } else {
      inner = s_u * (gmid.sgn() > 0 ? 1 : (gmid.sgn() < 0 ? -1 : 0));
    }
    const int mu = sa1 * sa2 * inner;
    const RootSelector conj = other(s2);
    const bool bad =
        (mu > 0 && conj == RootSelector::Lo && chi <= 0) ||
        (mu < 0 && conj == RootSelector::Hi && chi >= 0) ||
        (mu == 0 && chi != (dsc2.sgn() > 0 ? (conj == RootSelector::Lo ? 1 : -1) : 0));
    if (bad) throw ContractViolation("repeated_squaring_compare: conjugate sign inconsistent");
  }

  if (chi == 0) {
    // r1^{s1} coincides with r2^{~s2}; the answer is the within-pair order.
    if (dsc2.sgn() == 0) return 0;
    return s2 == RootSelector::Hi ? -1 : 1;
  }

  // sign of T + eps * uq * sqrt(disc1), radical removed by one squaring.
  const int s_t = tt.sgn();
  const int s_r = dsc1.sgn() > 0 ? eps * uq.sgn() : 0;
  int sv;
  if (s_r == 0) {
    sv = s_t;
  } else if (s_t == 0 || s_t == s_r) {
    sv = s_r;
  } else {
    const int sf = fin.sgn();
    sv = sf > 0 ? s_t : (sf < 0 ? s_r : 0);
  }
  return chi * sv;
}

int repeated_squaring_compare(const Quadratic& q1, RootSelector s1, const Quadratic& q2,
                              RootSelector s2, const KnownSigns& cross, mpfr_prec_t prec,
                              OpCount* ops) {
  const Minors m1 = precompute_minors(q1, prec, ops);
  const Minors m2 = precompute_minors(q2, prec, ops);
  return repeated_squaring_compare(q1, s1, q2, s2, cross, m1, m2, ops);
}

}  // namespace qorder

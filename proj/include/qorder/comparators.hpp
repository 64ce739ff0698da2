// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

#include "qorder/bigfloat.hpp"
#include "qorder/core_types.hpp"
#include "qorder/exact.hpp"

namespace qorder {

//! Staged precisions for the extended-precision root computation: products
//! and sums of the discriminant at base*disc_mult bits, the square root and
//! the following addition at base*sqrt_mult, divisions and the final
//! comparison at base*div_mult. Multipliers are nondecreasing.
struct PrecisionSchedule {
  int base_bits = kStorageBits;
  int disc_mult = 6;
  int sqrt_mult = 12;
  int div_mult = 24;

  mpfr_prec_t disc_bits() const { return mpfr_prec_t(base_bits) * disc_mult; }
  mpfr_prec_t sqrt_bits() const { return mpfr_prec_t(base_bits) * sqrt_mult; }
  mpfr_prec_t div_bits() const { return mpfr_prec_t(base_bits) * div_mult; }

  //! Schedule whose top stage is `top` times the base width, with the lower
  //! stages at 1/4 and 1/2 of that (the default 24 yields 6/12/24).
  static PrecisionSchedule from_multiplier(int base_bits, int top) {
    PrecisionSchedule s;
    s.base_bits = base_bits;
    s.div_mult = std::max(1, top);
    s.sqrt_mult = std::max(1, (s.div_mult + 1) / 2);
    s.disc_mult = std::max(1, (s.div_mult + 3) / 4);
    return s;
  }
};

//! Sign of the difference of two machine-precision roots. One operation;
//! zero only on exact equality of the stored values.
int approx_compare(Storage r1, Storage r2, OpCount* ops = nullptr);

//! Both roots of a quadratic at the schedule's staged precisions, using the
//! same cancellation-free branch structure as stable_roots. The roots can be
//! reused across every comparison involving this quadratic on a line.
struct ExtendedRoots {
  BigFloat lo, hi;
};
ExtendedRoots extended_roots(const Quadratic& q, const PrecisionSchedule& sched,
                             OpCount* ops = nullptr);

//! Staged-precision comparison: recompute the two selected roots, subtract at
//! the top width and take the sign. Accuracy improves with the schedule but
//! correctness is not guaranteed.
int extended_compare(const Quadratic& q1, RootSelector s1, const Quadratic& q2, RootSelector s2,
                     const PrecisionSchedule& sched);
int extended_compare(const ExtendedRoots& r1, RootSelector s1, const ExtendedRoots& r2,
                     RootSelector s2, const PrecisionSchedule& sched);

//! Per-quadratic precomputed products, full-coefficient convention:
//! alpha = a^2, gamma = c^2, delta = a*b, eps = a*c, zeta = b*c and
//! d = b^2 - a*c. Exactly 7 operations; shared by the resultant and
//! repeated-squaring comparators as their per-quadratic initialization.
//! Note d is not the discriminant: b^2 - 4ac = d - 3*eps.
struct Minors {
  BigFloat alpha, gamma, delta, eps, zeta, d;
  mpfr_prec_t prec;

  explicit Minors(mpfr_prec_t p)
      : alpha(p), gamma(p), delta(p), eps(p), zeta(p), d(p), prec(p) {}
};

Minors precompute_minors(const Quadratic& q, mpfr_prec_t prec, OpCount* ops = nullptr);

//! Determinant of the 4x4 Sylvester matrix of the two quadratics, evaluated
//! from minors in exactly 11 operations (6 products, 5 additions or
//! subtractions). Equals a1^2*a2^2 times the product of the four root
//! differences; its sign is exact when the working precision covers the
//! doubled coefficient width (4*(coefficient bits) + 3 suffices).
BigFloat resultant_delta(const Minors& m1, const Minors& m2, OpCount* ops = nullptr);

//! Signs of root-pair differences sign(r1^i - r2^j), indexed by the two
//! selectors. At most one pair is left unknown.
struct KnownSigns {
  std::optional<int> sign[2][2];

  std::optional<int> get(RootSelector i, RootSelector j) const {
    return sign[static_cast<int>(i)][static_cast<int>(j)];
  }
  void set(RootSelector i, RootSelector j, int v) {
    sign[static_cast<int>(i)][static_cast<int>(j)] = v;
  }
  int known_count() const {
    int n = 0;
    for (const auto& row : sign)
      for (const auto& s : row) n += s.has_value() ? 1 : 0;
    return n;
  }
};

struct ResolvedOrder {
  KnownSigns known;
  std::optional<std::pair<RootSelector, RootSelector>> ambiguous;
};

//! Pack an oracle's four pair signs into KnownSigns, leaving (s1, s2) as the
//! designated ambiguous pair. Array order is (lo-lo, lo-hi, hi-lo, hi-hi).
KnownSigns known_from_signs(const std::array<int, 4>& all, RootSelector s1, RootSelector s2);

//! Orders every root pair except at most one, exactly, using lower-precision
//! tests than a root comparison needs. The zero of the derivative
//! x_i = -b_i/(2 a_i) separates the two roots of quadratic i: vertices are
//! compared by cross-multiplication; if they coincide, scaled squared
//! discriminants decide all pairs. Otherwise the signs of both quadratics at
//! both vertices bracket each root into vertex-delimited intervals, and every
//! interval-separated pair gets its sign. All arithmetic is exact (integer).
//!
//! The one pair whose intervals overlap is reported as ambiguous; it may
//! still be resolvable by other means. Throws MoreThanOneAmbiguousPair when
//! bracketing leaves two pairs open, and NoRealRoots if a discriminant is
//! negative.
ResolvedOrder resolve_known_pairs(const IntQuadratic& q1, const IntQuadratic& q2);
ResolvedOrder resolve_known_pairs(const Quadratic& q1, const Quadratic& q2);

//! Order of the ambiguous pair (s1, s2) from the resultant: its sign equals
//! the sign of the Sylvester determinant times the parity of negatives among
//! the three known pair signs (leading coefficients enter squared and are
//! ignored). Exactly 11 counted operations. Returns 0 only when the pair is
//! an exact tie.
//!
//! Throws KnownSignZero when any known sign is zero: a tie elsewhere forces
//! the determinant to vanish, so the ambiguous pair cannot be resolved here.
int resultant_compare(RootSelector s1, RootSelector s2, const KnownSigns& known, const Minors& m1,
                      const Minors& m2, OpCount* ops = nullptr);

//! Exact sign of r1^{s1} - (-b2/(2 a2)), i.e. which side of quadratic 2's
//! vertex the selected root of quadratic 1 falls on. Denominators are
//! cleared and the single radical removed by one squaring; exact.
int midpoint_side_test(const Quadratic& q1, RootSelector s1, const Quadratic& q2);

//! Division- and radical-free comparison of r1^{s1} with r2^{s2}. Requires
//! the sign of the conjugate pair (r1^{s1} - r2^{~s2}), which the caller
//! supplies through `cross` (obtainable from midpoint_side_test); the
//! supplied sign is verified against an internal vertex test and a
//! ContractViolation is thrown on mismatch. The final expression
//!   a2^2 b1^2 - 2 a1 a2^2 c1 + 2 a1^2 a2 c2 - a1 a2 b1 b2
//!     +- sqrt((a1 a2 b2 - a2^2 b1)^2 (b1^2 - 4 a1 c1))
//! is evaluated by isolating the radical and squaring once; its sub-radical
//! part is exact at 8x the coefficient width. Exactly 25 counted operations
//! beyond the two 7-operation minor initializations.
int repeated_squaring_compare(const Quadratic& q1, RootSelector s1, const Quadratic& q2,
                              RootSelector s2, const KnownSigns& cross, const Minors& m1,
                              const Minors& m2, OpCount* ops = nullptr);

//! Convenience overload that builds both minors internally (14 extra ops).
int repeated_squaring_compare(const Quadratic& q1, RootSelector s1, const Quadratic& q2,
                              RootSelector s2, const KnownSigns& cross, mpfr_prec_t prec,
                              OpCount* ops = nullptr);

//! Working precision that makes repeated_squaring_compare exact for
//! quadratics whose coefficients are integers of at most `coeff_bits` bits.
inline mpfr_prec_t rs_exact_bits(int coeff_bits) { return mpfr_prec_t(8) * coeff_bits + 16; }

//! Working precision that makes the resultant sign exact in the same regime.
inline mpfr_prec_t delta_exact_bits(int coeff_bits) { return mpfr_prec_t(4) * coeff_bits + 3; }

}  // namespace qorder

// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "qorder/errors.hpp"
#include "qorder/ops.hpp"

namespace qorder {

//! Scene storage format. Quadric coefficients and line endpoints are kept in
//! this format; well-scaled inputs are then exactly representable.
using Storage = float;
//! Expansion format for substituted quadratics, twice the storage width.
using Working = double;

inline constexpr int kStorageBits = 24;  // significand width of Storage

struct Vec3 {
  Storage x{0}, y{0}, z{0};
};

//! Implicit degree-2 surface Q(x,y,z) = 0 with 10 stored coefficients.
struct Quadric {
  Storage xx{0}, xy{0}, xz{0};
  Storage yy{0}, yz{0}, zz{0};
  Storage x{0}, y{0}, z{0}, c{0};

  bool finite() const;
};

//! Segment l(t) = origin + t*dir for t in [0,1]; dir must be nonzero.
struct LineSegment {
  Vec3 origin;
  Vec3 dir;
};

//! Full-coefficient quadratic a*t^2 + b*t + c in expansion precision, with
//! the discriminant cached (rounded to Working).
struct Quadratic {
  Working a{0}, b{0}, c{0};
  Working disc{0};
};

//! Storage-precision quadratic used by the machine pipeline: coefficients
//! rounded to Storage and the discriminant evaluated with Storage arithmetic.
struct MachineQuadratic {
  Storage a{0}, b{0}, c{0};
  Storage disc{0};
};

//! Which closed-form branch produced a root: u/(2a) or 2c/u.
enum class RootBranch : std::uint8_t { Quotient, Ratio };

//! Selects the smaller or larger real root of a quadratic.
enum class RootSelector : std::uint8_t { Lo = 0, Hi = 1 };

inline RootSelector other(RootSelector s) {
  return s == RootSelector::Lo ? RootSelector::Hi : RootSelector::Lo;
}

template <typename T>
struct RootPairT {
  T lo{}, hi{};
  RootBranch lo_branch{RootBranch::Quotient}, hi_branch{RootBranch::Ratio};

  T get(RootSelector s) const { return s == RootSelector::Lo ? lo : hi; }
};
using RootPair = RootPairT<Working>;

enum class ScreenResult : std::uint8_t { Real, None };

//! Expand Q(l(t)) symbolically into a quadratic in t. Products and sums are
//! evaluated in Working precision, which is exact for 16-bit fixed-point
//! inputs; coefficient magnitudes then stay below 2^52.
Quadratic substitute(const LineSegment& line, const Quadric& q);

//! Same expansion carried out entirely in Storage arithmetic, matching the
//! machine-precision pipeline that stores coefficients and discriminants in
//! the storage format.
MachineQuadratic machine_substitute(const LineSegment& line, const Quadric& q);

//! Real-intersection screen: the discriminant is evaluated in storage-format
//! arithmetic, so near-tangent intersections may be missed; that is accepted
//! behavior. Tangency (disc == 0) counts as real.
ScreenResult discriminant_screen(const Quadratic& q);
ScreenResult discriminant_screen(const MachineQuadratic& q);

//! Both roots via the cancellation-free form: with s = sign(b) (s = +1 for
//! b == 0), u = -(b + s*sqrt(b^2 - 4ac)); one root is u/(2a), the other
//! 2c/u. Neither root is computed through the difference-prone branch.
//! Counted cost is 12 operations.
//!
//! Throws DegenerateQuadratic for a == 0 and NoRealRoots for disc < 0.
RootPair stable_roots(const Quadratic& q, OpCount* ops = nullptr);
RootPairT<Storage> stable_roots(const MachineQuadratic& q, OpCount* ops = nullptr);

//! Binary exponent of a nonzero finite value: ilogb semantics, so
//! |v| lies in [2^e, 2^(e+1)).
inline int binary_exponent(double v) { return std::ilogb(v); }

//! True when every nonzero coefficient's exponent lies in [emin, emax].
bool exponents_in_range(const Quadric& q, int emin, int emax);
bool exponents_in_range(const Quadratic& q, int emin, int emax);

}  // namespace qorder

// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/core_types.hpp"

#include <algorithm>
#include <cmath>

namespace qorder {

bool Quadric::finite() const {
  for (Storage v : {xx, xy, xz, yy, yz, zz, x, y, z, c}) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

namespace {

// Shared expansion; T selects the arithmetic the pipeline stage runs in.
// The summation order is fixed so results are bit-reproducible.
template <typename T>
void expand(const LineSegment& line, const Quadric& q, T& a, T& b, T& c) {
  const T ox = line.origin.x, oy = line.origin.y, oz = line.origin.z;
  const T vx = line.dir.x, vy = line.dir.y, vz = line.dir.z;
  const T xx = q.xx, xy = q.xy, xz = q.xz;
  const T yy = q.yy, yz = q.yz, zz = q.zz;
  const T lx = q.x, ly = q.y, lz = q.z, cc = q.c;

  a = xx * vx * vx + yy * vy * vy + zz * vz * vz  //
      + xy * vx * vy + xz * vx * vz + yz * vy * vz;

  b = T(2) * (xx * ox * vx + yy * oy * vy + zz * oz * vz)  //
      + xy * (ox * vy + oy * vx)                           //
      + xz * (ox * vz + oz * vx)                           //
      + yz * (oy * vz + oz * vy)                           //
      + lx * vx + ly * vy + lz * vz;

  c = xx * ox * ox + yy * oy * oy + zz * oz * oz  //
      + xy * ox * oy + xz * ox * oz + yz * oy * oz  //
      + lx * ox + ly * oy + lz * oz + cc;
}

template <typename T>
RootPairT<T> stable_roots_impl(T a, T b, T c, OpCount* ops) {
  if (a == T(0)) throw DegenerateQuadratic{};

  const T b2 = b * b;
  tick(ops);
  const T ac = a * c;
  tick(ops);
  const T ac4 = T(4) * ac;
  tick(ops);
  const T disc = b2 - ac4;
  tick(ops);
  if (disc < T(0)) throw NoRealRoots{};

  const T s = std::sqrt(disc);
  tick(ops);
  const T sb = (b < T(0) ? T(-1) : T(1)) * s;
  tick(ops);
  const T t = b + sb;
  tick(ops);
  const T u = -t;
  tick(ops);
  const T a2 = a + a;
  tick(ops);
  const T r1 = u / a2;  // quotient branch
  tick(ops);

  T r2 = r1;
  RootBranch r2_branch = RootBranch::Quotient;
  if (u != T(0)) {
    const T c2 = c + c;
    tick(ops);
    r2 = c2 / u;  // ratio branch
    tick(ops);
    r2_branch = RootBranch::Ratio;
  }

  RootPairT<T> out;
  if (r1 <= r2) {
    out.lo = r1;
    out.lo_branch = RootBranch::Quotient;
    out.hi = r2;
    out.hi_branch = r2_branch;
  } else {
    out.lo = r2;
    out.lo_branch = r2_branch;
    out.hi = r1;
    out.hi_branch = RootBranch::Quotient;
  }
  return out;
}

}  // namespace

Quadratic substitute(const LineSegment& line, const Quadric& q) {
  Quadratic out;
  expand<Working>(line, q, out.a, out.b, out.c);
  if (!std::isfinite(out.a) || !std::isfinite(out.b) || !std::isfinite(out.c)) {
    throw ExponentRangeViolation("substituted quadratic overflowed; scene exponent range violated");
  }
  out.disc = out.b * out.b - Working(4) * out.a * out.c;
  return out;
}

MachineQuadratic machine_substitute(const LineSegment& line, const Quadric& q) {
  MachineQuadratic out;
  expand<Storage>(line, q, out.a, out.b, out.c);
  out.disc = out.b * out.b - Storage(4) * out.a * out.c;
  return out;
}

ScreenResult discriminant_screen(const Quadratic& q) {
  // Storage-format evaluation, independent of the cached Working value.
  const MachineQuadratic m{static_cast<Storage>(q.a), static_cast<Storage>(q.b),
                           static_cast<Storage>(q.c), 0.0f};
  const Storage disc = m.b * m.b - Storage(4) * m.a * m.c;
  return disc >= Storage(0) ? ScreenResult::Real : ScreenResult::None;
}

ScreenResult discriminant_screen(const MachineQuadratic& q) {
  return q.disc >= Storage(0) ? ScreenResult::Real : ScreenResult::None;
}

RootPair stable_roots(const Quadratic& q, OpCount* ops) {
  return stable_roots_impl<Working>(q.a, q.b, q.c, ops);
}

RootPairT<Storage> stable_roots(const MachineQuadratic& q, OpCount* ops) {
  return stable_roots_impl<Storage>(q.a, q.b, q.c, ops);
}

bool exponents_in_range(const Quadric& q, int emin, int emax) {
  for (Storage v : {q.xx, q.xy, q.xz, q.yy, q.yz, q.zz, q.x, q.y, q.z, q.c}) {
    if (v == 0.0f) continue;
    const int e = binary_exponent(v);
    if (e < emin || e > emax) return false;
  }
  return true;
}

bool exponents_in_range(const Quadratic& q, int emin, int emax) {
  for (Working v : {q.a, q.b, q.c}) {
    if (v == 0.0) continue;
    const int e = binary_exponent(v);
    if (e < emin || e > emax) return false;
  }
  return true;
}

}  // namespace qorder

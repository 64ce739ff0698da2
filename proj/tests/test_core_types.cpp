// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>
#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <random>

#include "qorder/core_types.hpp"
#include "qorder/exact.hpp"

using namespace qorder;

namespace {

// Independent expansion oracle over exact rationals.
struct RationalQuadratic {
  mpq_class a, b, c;
};

RationalQuadratic rational_substitute(const LineSegment& line, const Quadric& q) {
  const auto r = [](float v) { return mpq_class(v); };
  const mpq_class ox = r(line.origin.x), oy = r(line.origin.y), oz = r(line.origin.z);
  const mpq_class vx = r(line.dir.x), vy = r(line.dir.y), vz = r(line.dir.z);
  const mpq_class xx = r(q.xx), xy = r(q.xy), xz = r(q.xz);
  const mpq_class yy = r(q.yy), yz = r(q.yz), zz = r(q.zz);
  const mpq_class lx = r(q.x), ly = r(q.y), lz = r(q.z), cc = r(q.c);

  RationalQuadratic out;
  out.a = xx * vx * vx + yy * vy * vy + zz * vz * vz + xy * vx * vy + xz * vx * vz + yz * vy * vz;
  out.b = 2 * (xx * ox * vx + yy * oy * vy + zz * oz * vz) + xy * (ox * vy + oy * vx) +
          xz * (ox * vz + oz * vx) + yz * (oy * vz + oz * vy) + lx * vx + ly * vy + lz * vz;
  out.c = xx * ox * ox + yy * oy * oy + zz * oz * oz + xy * ox * oy + xz * ox * oz +
          yz * oy * oz + lx * ox + ly * oy + lz * oz + cc;
  return out;
}

// Random w-bit fixed-point value: integer/2^w in [-1, 1).
float fixed_point(std::mt19937_64& rng, int w) {
  const auto span = 1LL << w;
  const long long k = static_cast<long long>(rng() % (2 * span)) - span;
  return std::ldexp(static_cast<float>(k), -w);
}

Quadric random_quadric(std::mt19937_64& rng, int w) {
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

LineSegment random_line(std::mt19937_64& rng, int w) {
  LineSegment l;
  l.origin = {fixed_point(rng, w), fixed_point(rng, w), fixed_point(rng, w)};
  do {
    l.dir = {fixed_point(rng, w), fixed_point(rng, w), fixed_point(rng, w)};
  } while (l.dir.x == 0 && l.dir.y == 0 && l.dir.z == 0);
  return l;
}

double ulp_of(double v) { return std::nextafter(std::fabs(v), INFINITY) - std::fabs(v); }

}  // namespace

TEST_CASE("substitute: unit sphere examples") {
  Quadric sphere;  // x^2 + y^2 + z^2 - 1
  sphere.xx = sphere.yy = sphere.zz = 1.0f;
  sphere.c = -1.0f;

  LineSegment axis{{0, 0, 0}, {1, 0, 0}};
  Quadratic q = substitute(axis, sphere);
  CHECK(q.a == 1.0);
  CHECK(q.b == 0.0);
  CHECK(q.c == -1.0);
  CHECK(q.disc == 4.0);

  LineSegment shifted{{2, 0, 0}, {1, 0, 0}};
  q = substitute(shifted, sphere);
  CHECK(q.a == 1.0);
  CHECK(q.b == 4.0);
  CHECK(q.c == 3.0);
}

TEST_CASE("substitute: first nested sphere along the diagonal") {
  Quadric s;  // center (0.5, 0.5, 0.5), radius 0.5
  s.xx = s.yy = s.zz = 1.0f;
  s.x = s.y = s.z = -1.0f;
  s.c = 0.5f;
  const LineSegment diag{{0, 0, 0}, {1, 1, 1}};

  const RationalQuadratic want = rational_substitute(diag, s);
  CHECK(want.a == 3);
  CHECK(want.b == -3);
  CHECK(want.c == mpq_class(1, 2));

  const Quadratic got = substitute(diag, s);
  CHECK(got.a == 3.0);
  CHECK(got.b == -3.0);
  CHECK(got.c == 0.5);
}

TEST_CASE("substitute agrees with the rational oracle on fixed-point inputs") {
  std::mt19937_64 rng(2024);
  const int w = 16;
  for (int i = 0; i < 100000; ++i) {
    const Quadric quad = random_quadric(rng, w);
    const LineSegment line = random_line(rng, w);
    const Quadratic got = substitute(line, quad);
    const RationalQuadratic want = rational_substitute(line, quad);
    REQUIRE(mpq_class(got.a) == want.a);
    REQUIRE(mpq_class(got.b) == want.b);
    REQUIRE(mpq_class(got.c) == want.c);
  }
}

TEST_CASE("substituted coefficients fit 3w+4 bits") {
  std::mt19937_64 rng(99);
  const int w = 16;
  for (int i = 0; i < 20000; ++i) {
    const Quadratic q = substitute(random_line(rng, w), random_quadric(rng, w));
    for (double v : {q.a, q.b, q.c}) {
      if (v == 0.0) continue;
      // |v| < 2^(3w+4) and v is an integer multiple of 2^(-3w)
      CHECK(std::fabs(v) < std::ldexp(1.0, 3 * w + 4));
      const double scaled = std::ldexp(v, 3 * w);
      CHECK(scaled == std::floor(scaled));
    }
  }
}

TEST_CASE("discriminant screen") {
  CHECK(discriminant_screen(Quadratic{1, 0, -1, 4}) == ScreenResult::Real);
  CHECK(discriminant_screen(Quadratic{1, 0, 1, -4}) == ScreenResult::None);
  // Tangency counts as real.
  CHECK(discriminant_screen(Quadratic{1, 2, 1, 0}) == ScreenResult::Real);
}

TEST_CASE("stable roots: integer factorizations") {
  OpCount ops;
  RootPair r = stable_roots(Quadratic{1, -3, 2, 0}, &ops);
  CHECK(r.lo == 1.0);
  CHECK(r.hi == 2.0);
  CHECK(ops.n == 12);

  r = stable_roots(Quadratic{1, 6, 5, 0});
  CHECK(r.lo == -5.0);
  CHECK(r.hi == -1.0);
}

TEST_CASE("stable roots: no cancellation on the small root") {
  // Small root of t^2 - 2t + 1e-8, checked against an extended-precision
  // evaluation of the same closed form.
  const Quadratic q{1.0, -2.0, 1e-8, 0};
  const RootPair r = stable_roots(q);

  mpfr_t b2, ac, disc, s, u, lo;
  mpfr_inits2(256, b2, ac, disc, s, u, lo, nullptr);
  mpfr_set_d(b2, q.b, MPFR_RNDN);
  mpfr_sqr(b2, b2, MPFR_RNDN);
  mpfr_set_d(ac, q.a, MPFR_RNDN);
  mpfr_mul_d(ac, ac, q.c, MPFR_RNDN);
  mpfr_mul_si(ac, ac, 4, MPFR_RNDN);
  mpfr_sub(disc, b2, ac, MPFR_RNDN);
  mpfr_sqrt(s, disc, MPFR_RNDN);
  mpfr_set_d(u, q.b, MPFR_RNDN);
  mpfr_sub(u, u, s, MPFR_RNDN);  // b < 0: b - sqrt(disc)
  mpfr_neg(u, u, MPFR_RNDN);
  mpfr_d_div(lo, 2.0 * q.c, u, MPFR_RNDN);
  const double want = mpfr_get_d(lo, MPFR_RNDN);
  mpfr_clears(b2, ac, disc, s, u, lo, nullptr);

  CHECK(want == doctest::Approx(5.0000000125e-9).epsilon(1e-9));
  // Matches well within one storage-format ulp (2^-23 relative).
  CHECK(std::fabs(r.lo - want) <= std::ldexp(std::fabs(want), -23));
}

TEST_CASE("stable roots: errors") {
  CHECK_THROWS_AS(stable_roots(Quadratic{0, 1, 1, 0}), DegenerateQuadratic);
  CHECK_THROWS_AS(stable_roots(Quadratic{1, 0, 1, 0}), NoRealRoots);
}

TEST_CASE("stable roots: product and vertex invariants") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-4.0, 4.0);
  int tested = 0;
  while (tested < 20000) {
    Quadratic q{coef(rng), coef(rng), coef(rng), 0};
    if (q.a == 0.0) continue;
    q.disc = q.b * q.b - 4 * q.a * q.c;
    if (q.disc < 0) continue;
    ++tested;
    const RootPair r = stable_roots(q);
    CHECK(r.lo <= r.hi);
    if (q.c != 0.0) {
      CHECK(std::fabs(r.lo * r.hi * q.a - q.c) <= 4 * ulp_of(q.c));
    }
    // lo <= -b/(2a) <= hi, allowing one rounding on the vertex itself.
    const double vertex = -q.b / (2 * q.a);
    const double slack = 2 * ulp_of(vertex == 0 ? 1e-300 : vertex);
    CHECK(r.lo <= vertex + slack);
    CHECK(r.hi >= vertex - slack);
  }
}

TEST_CASE("storage-precision roots carry branch tags") {
  const MachineQuadratic q{1.0f, -3.0f, 2.0f, 1.0f};
  const RootPairT<Storage> r = stable_roots(q);
  CHECK(r.lo == 1.0f);
  CHECK(r.hi == 2.0f);
  CHECK(r.lo_branch == RootBranch::Ratio);
  CHECK(r.hi_branch == RootBranch::Quotient);
}

TEST_CASE("exponent range helpers") {
  Quadric q;
  q.xx = 1.0f;
  q.c = -0.00390625f;  // -2^-8
  CHECK(exponents_in_range(q, -8, 1));
  q.c = -0.001f;  // exponent -10
  CHECK(!exponents_in_range(q, -8, 1));
}

TEST_CASE("integer scaling is exact and sign-normalized") {
  // (-1.5, 2.25, -0.375) negated and scaled by 2^3 is (12, -18, 3).
  const IntQuadratic iq = to_integer(Quadratic{-1.5, 2.25, -0.375, 0});
  CHECK(sgn(iq.a) > 0);
  CHECK(iq.b * iq.a == mpz_class(12) * -18 * (iq.a / 12) * (iq.a / 12));
  CHECK(iq.a * 3 == iq.c * 12);
  CHECK(iq.a * -18 == iq.b * 12);
}

// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <utility>

#include "qorder/ops.hpp"

namespace qorder {

//! Minimal RAII wrapper over an mpfr value. Every arithmetic helper takes an
//! explicit destination precision and rounds to nearest, which is what the
//! staged-precision comparators need: each pipeline stage computes at its own
//! width and rounding happens exactly once per operation.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  int sgn() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline BigFloat bf_add(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  tick(ops);
  return r;
}

inline BigFloat bf_sub(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  tick(ops);
  return r;
}

inline BigFloat bf_mul(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  tick(ops);
  return r;
}

inline BigFloat bf_mul_si(long k, const BigFloat& a, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_mul_si(r.raw(), a.raw(), k, MPFR_RNDN);
  tick(ops);
  return r;
}

inline BigFloat bf_div(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  tick(ops);
  return r;
}

inline BigFloat bf_sqrt(const BigFloat& a, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  tick(ops);
  return r;
}

inline BigFloat bf_neg(const BigFloat& a, mpfr_prec_t prec, OpCount* ops = nullptr) {
  BigFloat r(prec);
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  tick(ops);
  return r;
}

inline int bf_cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }

}  // namespace qorder

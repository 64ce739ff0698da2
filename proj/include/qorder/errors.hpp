// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qorder {

//! Quadratic has a vanishing leading coefficient; the linear case is out of
//! the supported scope and is rejected rather than special-cased.
class DegenerateQuadratic : public std::domain_error {
 public:
  DegenerateQuadratic() : std::domain_error("quadratic has zero leading coefficient") {}
};

//! Discriminant is negative where real roots are required.
class NoRealRoots : public std::domain_error {
 public:
  NoRealRoots() : std::domain_error("quadratic has no real roots") {}
};

//! A known root-pair sign of zero forces the resultant to vanish, so the
//! ambiguous pair cannot be resolved by it; the caller must fall back.
class KnownSignZero : public std::runtime_error {
 public:
  KnownSignZero() : std::runtime_error("known pair sign is zero; resultant cannot resolve") {}
};

//! Interval bracketing left more than one root pair unresolved.
class MoreThanOneAmbiguousPair : public std::runtime_error {
 public:
  MoreThanOneAmbiguousPair() : std::runtime_error("more than one ambiguous root pair") {}
};

//! Caller-supplied data contradicts an exact internal check.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

//! A generated coefficient fell outside the scene's declared exponent range.
class ExponentRangeViolation : public std::runtime_error {
 public:
  explicit ExponentRangeViolation(const std::string& what) : std::runtime_error(what) {}
};

//! Line resampling exceeded its iteration cap.
class SampleExhausted : public std::runtime_error {
 public:
  SampleExhausted() : std::runtime_error("line resampling cap exceeded") {}
};

//! Least-squares system has linearly dependent regressors.
class RankDeficient : public std::runtime_error {
 public:
  RankDeficient() : std::runtime_error("fit regressors are rank deficient") {}
};

}  // namespace qorder

// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "qorder/comparators.hpp"
#include "qorder/oracle.hpp"
#include "qorder/scenes.hpp"

namespace qorder {

enum class Method : std::uint8_t { Approx, Extended, Resultant };

struct TrackerConfig {
  Method method = Method::Resultant;
  int threshold_exp = -16;  // escalate when |machine diff| < 2^threshold_exp
  PrecisionSchedule sched = PrecisionSchedule::from_multiplier(kStorageBits, 24);

  Storage threshold() const { return std::ldexp(1.0f, threshold_exp); }
};

//! Per-(line, quadric) state. The exact expansion feeds the oracle and the
//! resultant comparator; the storage-rounded expansion is what the machine
//! pipeline sorts with and what the extended method refines, matching a
//! pipeline that stores quadratic coefficients and discriminants in storage
//! precision.
struct QuadricHit {
  int quadric_index = -1;
  Quadratic exact;
  MachineQuadratic mach;
  RootPairT<Storage> roots;

  std::optional<Minors> minors;       // resultant method init
  std::optional<ExtendedRoots> ext;   // extended method init (absent if the
                                      // rounded quadratic lost its real roots)
  std::optional<IntQuadratic> ints;   // lazy exact integer form
  std::optional<int> disc_sign;       // lazy exact discriminant sign
};

struct Intersection {
  int hit = -1;  // index into LineTrace::hits
  RootSelector sel = RootSelector::Lo;
  Storage root = 0;
};

struct LineTrace {
  std::vector<QuadricHit> hits;
  std::vector<Intersection> items;
};

struct SortStats {
  long long comparisons = 0;
  long long escalated = 0;
  long long ties = 0;
  long long fallbacks = 0;  // escalations the method could not resolve itself
  long long phantoms = 0;   // entries whose exact discriminant is negative
  long long elapsed_ns = 0;
};

//! Substitute, screen at storage precision and compute machine roots for
//! every quadric; two entries per passing quadric (a tangency yields two
//! equal-valued entries). Initializes the active method's per-quadric data.
LineTrace intersect_line(const LineSegment& line, const Scene& scene, const TrackerConfig& cfg);

//! Comparison sort of the intersections. The comparator first takes the
//! machine-root difference; below the threshold it escalates to the
//! configured accurate method (the approximate method never escalates).
//! A stable merge sort is used so every ordering decision is an explicit
//! comparator call and ties keep insertion order.
void sort_intersections(LineTrace& trace, const TrackerConfig& cfg, SortStats& stats);

//! True iff the produced order disagrees with the exact order anywhere:
//! some adjacent pair of (non-phantom) entries is strictly inverted. A line
//! counts once no matter how many pairs are wrong.
bool score_line(LineTrace& trace, SortStats* stats = nullptr);

//! Exact sign of the difference of two selected roots; ground truth for a
//! single comparison. Throws NoRealRoots on phantoms.
int oracle_sign(QuadricHit& h1, RootSelector s1, QuadricHit& h2, RootSelector s2);

}  // namespace qorder

// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/tracker.hpp"

#include <cmath>

namespace qorder {

namespace {

const IntQuadratic& int_form(QuadricHit& h) {
  if (!h.ints.has_value()) h.ints = to_integer(h.exact);
  return *h.ints;
}

int exact_disc_sign(QuadricHit& h) {
  if (!h.disc_sign.has_value()) h.disc_sign = sgn(int_form(h).disc());
  return *h.disc_sign;
}

int sign_of(Storage d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }

// Stable top-down merge sort driven entirely by the supplied three-valued
// comparator; well defined for any comparator, unlike a pivoting sort.
template <typename Cmp>
void merge_sort(std::vector<Intersection>& v, Cmp cmp) {
  if (v.size() < 2) return;
  std::vector<Intersection> buf(v.size());
  const auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) buf[k++] = (cmp(v[i], v[j]) <= 0) ? v[i++] : v[j++];
    while (i < mid) buf[k++] = v[i++];
    while (j < hi) buf[k++] = v[j++];
    for (std::size_t t = lo; t < hi; ++t) v[t] = buf[t];
  };
  rec(rec, 0, v.size());
}

}  // namespace

int oracle_sign(QuadricHit& h1, RootSelector s1, QuadricHit& h2, RootSelector s2) {
  const ExactRoot e1 = exact_root(int_form(h1), s1);
  const ExactRoot e2 = exact_root(int_form(h2), s2);
  return exact_sign_diff(e1, e2);
}

LineTrace intersect_line(const LineSegment& line, const Scene& scene, const TrackerConfig& cfg) {
  LineTrace trace;
  trace.hits.reserve(scene.quadrics.size() / 4 + 4);
  for (std::size_t qi = 0; qi < scene.quadrics.size(); ++qi) {
    const Quadric& quad = scene.quadrics[qi];
    QuadricHit hit;
    hit.quadric_index = static_cast<int>(qi);
    hit.exact = substitute(line, quad);
    hit.mach = machine_substitute(line, quad);
    if (discriminant_screen(hit.mach) != ScreenResult::Real) continue;
    if (cfg.method == Method::Approx) {
      // The approximate method runs every computation in storage arithmetic.
      hit.roots = stable_roots(hit.mach);
    } else {
      // The accurate methods store roots (like the quadratic coefficients)
      // rounded from the working-precision values. A phantom admitted by the
      // storage-precision screen has no working-precision roots; its entries
      // carry the storage-arithmetic values instead.
      try {
        const RootPair wide = stable_roots(hit.exact);
        hit.roots.lo = static_cast<Storage>(wide.lo);
        hit.roots.hi = static_cast<Storage>(wide.hi);
        hit.roots.lo_branch = wide.lo_branch;
        hit.roots.hi_branch = wide.hi_branch;
      } catch (const NoRealRoots&) {
        hit.roots = stable_roots(hit.mach);
      }
    }

    if (cfg.method == Method::Resultant) {
      hit.minors = precompute_minors(hit.exact, cfg.sched.div_bits());
    } else if (cfg.method == Method::Extended) {
      // Refine from the stored coefficients: the working-precision values
      // rounded to the storage format. The rounded quadratic can have lost
      // its real roots even though the storage-precision screen passed; such
      // entries fall back at comparison time.
      const Quadratic stored{static_cast<Storage>(hit.exact.a), static_cast<Storage>(hit.exact.b),
                             static_cast<Storage>(hit.exact.c), 0.0};
      try {
        hit.ext = extended_roots(stored, cfg.sched);
      } catch (const NoRealRoots&) {
        hit.ext.reset();
      }
    }

    const int hidx = static_cast<int>(trace.hits.size());
    trace.hits.push_back(std::move(hit));
    trace.items.push_back({hidx, RootSelector::Lo, trace.hits.back().roots.lo});
    trace.items.push_back({hidx, RootSelector::Hi, trace.hits.back().roots.hi});
  }
  return trace;
}

namespace {

int accurate_compare(LineTrace& tr, const TrackerConfig& cfg, SortStats& st,
                     const Intersection& a, const Intersection& b, Storage machine_diff) {
  QuadricHit& h1 = tr.hits[static_cast<std::size_t>(a.hit)];
  QuadricHit& h2 = tr.hits[static_cast<std::size_t>(b.hit)];

  if (a.hit == b.hit) {
    if (a.sel == b.sel) return 0;
    const int ds = exact_disc_sign(h1);
    if (ds <= 0) return 0;  // tangent (or phantom): equal parameter values
    return a.sel == RootSelector::Lo ? -1 : 1;
  }

  if (cfg.method == Method::Extended) {
    if (h1.ext.has_value() && h2.ext.has_value()) {
      return extended_compare(*h1.ext, a.sel, *h2.ext, b.sel, cfg.sched);
    }
    ++st.fallbacks;  // rounded quadratic had no real roots
    return sign_of(machine_diff);
  }

  // Resultant method.
  try {
    const ResolvedOrder res = resolve_known_pairs(int_form(h1), int_form(h2));
    const auto direct = res.known.get(a.sel, b.sel);
    if (direct.has_value()) return *direct;
    try {
      return resultant_compare(a.sel, b.sel, res.known, *h1.minors, *h2.minors);
    } catch (const KnownSignZero&) {
      ++st.fallbacks;
      return oracle_sign(h1, a.sel, h2, b.sel);
    }
  } catch (const MoreThanOneAmbiguousPair&) {
    ++st.fallbacks;
    return oracle_sign(h1, a.sel, h2, b.sel);
  } catch (const NoRealRoots&) {
    ++st.fallbacks;  // phantom entry: no exact order exists
    return sign_of(machine_diff);
  }
}

}  // namespace

void sort_intersections(LineTrace& trace, const TrackerConfig& cfg, SortStats& stats) {
  const Storage threshold = cfg.threshold();
  auto cmp = [&](const Intersection& a, const Intersection& b) -> int {
    ++stats.comparisons;
    const Storage d = a.root - b.root;
    if (cfg.method == Method::Approx) return sign_of(d);
    if (std::fabs(d) >= threshold) return sign_of(d);
    ++stats.escalated;
    const int s = accurate_compare(trace, cfg, stats, a, b, d);
    if (s == 0) ++stats.ties;
    return s;
  };
  merge_sort(trace.items, cmp);
}

bool score_line(LineTrace& trace, SortStats* stats) {
  QuadricHit* prev_hit = nullptr;
  RootSelector prev_sel = RootSelector::Lo;
  bool error = false;
  for (const Intersection& item : trace.items) {
    QuadricHit& h = trace.hits[static_cast<std::size_t>(item.hit)];
    if (exact_disc_sign(h) < 0) {
      if (stats != nullptr) ++stats->phantoms;
      continue;  // phantom: excluded from the order check
    }
    if (prev_hit != nullptr && !error) {
      if (oracle_sign(*prev_hit, prev_sel, h, item.sel) > 0) error = true;
    }
    prev_hit = &h;
    prev_sel = item.sel;
  }
  return error;
}

}  // namespace qorder

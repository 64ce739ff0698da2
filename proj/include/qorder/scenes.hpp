// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qorder/core_types.hpp"

namespace qorder {

enum class SceneKind : std::uint8_t { PackedSpheres, NestedSpheres };

//! Immutable collection of quadrics with a declared coefficient exponent
//! range that every nonzero stored coefficient must satisfy.
struct Scene {
  SceneKind kind = SceneKind::PackedSpheres;
  int n = 0;  // sphere count parameter
  int exp_min = 0, exp_max = 0;
  std::vector<Quadric> quadrics;
};

//! Packed-sphere lattice parameters. The defaults are the dyadic values
//! radius 2^-4 and lattice constant 2^-3 (= 2r, touching neighbors), which
//! keep every nonzero coefficient's exponent inside [-8, 1]; the quoted
//! construction ("about 0.05", "spaced about 0.05") cannot meet that range,
//! so the nearest dyadic configuration that does is used and both values
//! stay adjustable here.
struct PackedParams {
  double radius = 0.0625;
  double spacing = 0.125;  // center-to-center lattice constant
};

//! 1331 spheres in a hexagonal close packing, first sphere centered at the
//! origin, one lattice axis aligned with y; quadratic-term coefficients are
//! all 1.0. Throws ExponentRangeViolation if a coefficient leaves [-8, 1].
Scene gen_packed_spheres(const PackedParams& params = {});

//! n concentric-ish spheres: sphere 0 at (0.5, 0.5, 0.5) with radius 0.5,
//! radii decreasing by (R0 - 2^-16)/n per step while centers move +x by the
//! same step minus 2^-19, so consecutive surfaces approach within exactly
//! 2^-19 at their +x poles (before storage rounding). The recurrence
//! terminus 2^-16 itself is not instantiated: the scene holds spheres
//! 0..n-1. Coefficient exponents must stay inside [-1, 0].
Scene gen_nested_spheres(int n);

//! Line admission screen. Nonzero quadratic coefficients of every
//! machine-real intersection must have exponents in [coeff_exp_min,
//! coeff_exp_max]; additionally any quadric whose exact discriminant is
//! nonzero but smaller in magnitude than 2^disc_exp_min rejects the line
//! (the discriminant is stored by the pipeline too, and a below-range one
//! breaks the accurate methods' exactness window).
struct LineScreen {
  int coeff_exp_min = -20;
  int coeff_exp_max = 0;
  int disc_exp_min = -20;
  int max_resamples = 1000;
};

struct SceneLine {
  LineSegment line;
  int resamples = 0;  // rejected draws before acceptance
};

//! Deterministic per-line seed stream.
std::uint64_t line_seed(std::uint64_t experiment_seed, std::uint64_t line_index);

//! Origin uniform over the unit cube; direction a normalized uniform draw
//! from [-1,1]^3. Resamples until the screen passes; throws SampleExhausted
//! past the cap.
SceneLine sample_line_packed(const Scene& scene, std::uint64_t seed, const LineScreen& screen = {});

//! Origin uniform over the unit cube; direction (1.0, 0.5, 0.5) - origin,
//! aiming every line at the point next to the near-tangency cluster.
SceneLine sample_line_nested(const Scene& scene, std::uint64_t seed, const LineScreen& screen = {});

//! Screen predicate used by the samplers, exposed for tests.
bool line_passes_screen(const Scene& scene, const LineSegment& line, const LineScreen& screen);

//! Plain-text scene serialization; coefficients as hexadecimal floats so the
//! round trip is bit-exact.
void save_scene(const Scene& scene, std::ostream& out);
void save_scene_file(const Scene& scene, const std::string& path);
Scene load_scene(std::istream& in);
Scene load_scene_file(const std::string& path);

}  // namespace qorder

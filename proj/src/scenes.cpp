// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/scenes.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace qorder {

namespace {

Quadric sphere_quadric(double cx, double cy, double cz, double radius) {
  // (x-cx)^2 + (y-cy)^2 + (z-cz)^2 = r^2, expanded with unit squared terms.
  const float fx = static_cast<float>(cx);
  const float fy = static_cast<float>(cy);
  const float fz = static_cast<float>(cz);
  Quadric q;
  q.xx = q.yy = q.zz = 1.0f;
  q.x = static_cast<float>(-2.0 * fx);
  q.y = static_cast<float>(-2.0 * fy);
  q.z = static_cast<float>(-2.0 * fz);
  q.c = static_cast<float>(double(fx) * fx + double(fy) * fy + double(fz) * fz - radius * radius);
  return q;
}

void check_range(const Quadric& q, int emin, int emax, const char* what) {
  if (!exponents_in_range(q, emin, emax)) {
    throw ExponentRangeViolation(std::string(what) + ": coefficient exponent outside range");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Scene gen_packed_spheres(const PackedParams& params) {
  const double d = params.spacing;
  const double row_z = d * std::sqrt(3.0) / 2.0;
  const double layer_y = d * std::sqrt(2.0 / 3.0);
  const double b_off_x = -d / 2.0;
  const double b_off_z = -d * std::sqrt(3.0) / 6.0;

  Scene scene;
  scene.kind = SceneKind::PackedSpheres;
  scene.n = 1331;
  scene.exp_min = -8;
  scene.exp_max = 1;
  scene.quadrics.reserve(1331);

  // Hexagonal layers in the xz-plane, ABAB stacked along y; offsets fold
  // inward so the farthest center stays inside the exponent budget.
  for (int k = 0; k < 11; ++k) {
    for (int j = 0; j < 11; ++j) {
      for (int i = 0; i < 11; ++i) {
        double x = i * d + (j % 2 ? d / 2.0 : 0.0);
        double z = j * row_z;
        const double y = k * layer_y;
        if (k % 2) {
          x += b_off_x;
          z += b_off_z;
        }
        Quadric q = sphere_quadric(x, y, z, params.radius);
        check_range(q, scene.exp_min, scene.exp_max, "packed spheres");
        scene.quadrics.push_back(q);
      }
    }
  }
  return scene;
}

Scene gen_nested_spheres(int n) {
  if (n < 1) throw std::invalid_argument("nested sphere count must be positive");
  const double r0 = 0.5;
  const double rn = 0x1.0p-16;
  const double eps = 0x1.0p-19;
  const double step = (r0 - rn) / n;

  Scene scene;
  scene.kind = SceneKind::NestedSpheres;
  scene.n = n;
  scene.exp_min = -1;
  scene.exp_max = 0;
  scene.quadrics.reserve(static_cast<std::size_t>(n));

  double r = r0;
  double x = 0.5;
  for (int i = 0; i < n; ++i) {
    Quadric q = sphere_quadric(x, 0.5, 0.5, r);
    check_range(q, scene.exp_min, scene.exp_max, "nested spheres");
    scene.quadrics.push_back(q);
    r -= step;
    x += step - eps;
  }
  return scene;
}

std::uint64_t line_seed(std::uint64_t experiment_seed, std::uint64_t line_index) {
  return splitmix64(experiment_seed ^ splitmix64(line_index + 0x51ab5e6d0fULL));
}

bool line_passes_screen(const Scene& scene, const LineSegment& line, const LineScreen& screen) {
  for (const Quadric& quad : scene.quadrics) {
    const Quadratic exact = substitute(line, quad);
    // A stored discriminant below the admissible window means this line
    // grazes the surface too closely for the fixed-precision pipeline.
    if (exact.disc != 0.0 && binary_exponent(exact.disc) < screen.disc_exp_min) return false;
    const MachineQuadratic mach = machine_substitute(line, quad);
    if (discriminant_screen(mach) == ScreenResult::Real) {
      if (!exponents_in_range(exact, screen.coeff_exp_min, screen.coeff_exp_max)) return false;
    }
  }
  return true;
}

namespace {

Vec3 round_vec(double x, double y, double z) {
  return Vec3{static_cast<float>(x), static_cast<float>(y), static_cast<float>(z)};
}

template <typename MakeLine>
SceneLine sample_with_screen(const Scene& scene, std::uint64_t seed, const LineScreen& screen,
                             MakeLine make) {
  std::mt19937_64 rng(seed);
  SceneLine out;
  for (int attempt = 0; attempt <= screen.max_resamples; ++attempt) {
    LineSegment line;
    if (!make(rng, line)) {
      ++out.resamples;
      continue;
    }
    if (line_passes_screen(scene, line, screen)) {
      out.line = line;
      return out;
    }
    ++out.resamples;
  }
  throw SampleExhausted{};
}

}  // namespace

SceneLine sample_line_packed(const Scene& scene, std::uint64_t seed, const LineScreen& screen) {
  return sample_with_screen(scene, seed, screen, [](std::mt19937_64& rng, LineSegment& line) {
    const double ox = uniform01(rng), oy = uniform01(rng), oz = uniform01(rng);
    const double dx = 2.0 * uniform01(rng) - 1.0;
    const double dy = 2.0 * uniform01(rng) - 1.0;
    const double dz = 2.0 * uniform01(rng) - 1.0;
    const double norm = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (norm < 1e-6) return false;
    line.origin = round_vec(ox, oy, oz);
    line.dir = round_vec(dx / norm, dy / norm, dz / norm);
    return true;
  });
}

SceneLine sample_line_nested(const Scene& scene, std::uint64_t seed, const LineScreen& screen) {
  return sample_with_screen(scene, seed, screen, [](std::mt19937_64& rng, LineSegment& line) {
    line.origin = round_vec(uniform01(rng), uniform01(rng), uniform01(rng));
    // Aim at the point just outside every sphere's +x pole.
    line.dir = Vec3{1.0f - line.origin.x, 0.5f - line.origin.y, 0.5f - line.origin.z};
    return line.dir.x != 0.0f || line.dir.y != 0.0f || line.dir.z != 0.0f;
  });
}

void save_scene(const Scene& scene, std::ostream& out) {
  out << "# quadric scene v1\n";
  out << "kind " << (scene.kind == SceneKind::PackedSpheres ? "packed" : "nested") << "\n";
  out << "n " << scene.n << "\n";
  out << "exp_range " << scene.exp_min << " " << scene.exp_max << "\n";
  out << "count " << scene.quadrics.size() << "\n";
  char buf[64];
  for (const Quadric& q : scene.quadrics) {
    const float coeffs[10] = {q.xx, q.xy, q.xz, q.yy, q.yz, q.zz, q.x, q.y, q.z, q.c};
    for (int i = 0; i < 10; ++i) {
      std::snprintf(buf, sizeof buf, "%a", static_cast<double>(coeffs[i]));
      out << buf << (i == 9 ? '\n' : ' ');
    }
  }
}

void save_scene_file(const Scene& scene, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open scene file for writing: " + path);
  save_scene(scene, out);
}

Scene load_scene(std::istream& in) {
  Scene scene;
  std::string tok;
  std::size_t count = 0;
  std::string header;
  std::getline(in, header);  // comment line
  while (in >> tok) {
    if (tok == "kind") {
      std::string k;
      in >> k;
      scene.kind = (k == "packed") ? SceneKind::PackedSpheres : SceneKind::NestedSpheres;
    } else if (tok == "n") {
      in >> scene.n;
    } else if (tok == "exp_range") {
      in >> scene.exp_min >> scene.exp_max;
    } else if (tok == "count") {
      in >> count;
      break;
    } else {
      throw std::runtime_error("malformed scene header near '" + tok + "'");
    }
  }
  scene.quadrics.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v[10];
    for (double& x : v) {
      in >> tok;
      x = std::strtod(tok.c_str(), nullptr);
    }
    Quadric q;
    q.xx = static_cast<float>(v[0]);
    q.xy = static_cast<float>(v[1]);
    q.xz = static_cast<float>(v[2]);
    q.yy = static_cast<float>(v[3]);
    q.yz = static_cast<float>(v[4]);
    q.zz = static_cast<float>(v[5]);
    q.x = static_cast<float>(v[6]);
    q.y = static_cast<float>(v[7]);
    q.z = static_cast<float>(v[8]);
    q.c = static_cast<float>(v[9]);
    scene.quadrics.push_back(q);
  }
  if (scene.quadrics.size() != count) throw std::runtime_error("scene file truncated");
  return scene;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path);
  return load_scene(in);
}

}  // namespace qorder

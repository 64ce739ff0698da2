// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#include "qorder/bench.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qorder {

namespace {

TimingRecord run_one_line(const Scene& scene, const RunConfig& cfg, int index) {
  const std::uint64_t seed = line_seed(cfg.seed, static_cast<std::uint64_t>(index));
  const SceneLine sl = (scene.kind == SceneKind::PackedSpheres)
                           ? sample_line_packed(scene, seed, cfg.screen)
                           : sample_line_nested(scene, seed, cfg.screen);

  SortStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  LineTrace trace = intersect_line(sl.line, scene, cfg.tracker);
  sort_intersections(trace, cfg.tracker, stats);
  const auto t1 = std::chrono::steady_clock::now();

  TimingRecord rec;
  rec.line_index = index;
  rec.quadrics = static_cast<int>(scene.quadrics.size());
  rec.comparisons = (cfg.method == Method::Approx) ? stats.comparisons : stats.escalated;
  rec.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  rec.error = cfg.score ? score_line(trace, &stats) : false;
  return rec;
}

}  // namespace

std::vector<TimingRecord> run_experiment(const Scene& scene, const RunConfig& cfg) {
  RunConfig line_cfg = cfg;
  line_cfg.tracker.method = cfg.method;
  std::vector<TimingRecord> out(static_cast<std::size_t>(cfg.lines));

  if (cfg.workers > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(cfg.workers)
#endif
    for (int i = 0; i < cfg.lines; ++i) {
      out[static_cast<std::size_t>(i)] = run_one_line(scene, line_cfg, i);
    }
  } else {
    for (int i = 0; i < cfg.lines; ++i) {
      out[static_cast<std::size_t>(i)] = run_one_line(scene, line_cfg, i);
    }
  }
  return out;
}

namespace {

// Ordinary least squares over the post-warmup records; k regressor columns
// plus an intercept.
FitResult ols(const std::vector<TimingRecord>& records, int warmup, bool with_quadrics) {
  std::vector<const TimingRecord*> used;
  for (const TimingRecord& r : records) {
    if (r.line_index >= warmup) used.push_back(&r);
  }
  const int cols = with_quadrics ? 3 : 2;
  if (static_cast<int>(used.size()) < cols + 1) throw RankDeficient{};

  Eigen::MatrixXd x(used.size(), cols);
  Eigen::VectorXd y(used.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    x(static_cast<Eigen::Index>(i), 0) = static_cast<double>(used[i]->comparisons);
    if (with_quadrics) x(static_cast<Eigen::Index>(i), 1) = static_cast<double>(used[i]->quadrics);
    x(static_cast<Eigen::Index>(i), cols - 1) = 1.0;
    y(static_cast<Eigen::Index>(i)) = static_cast<double>(used[i]->elapsed_ns) * 1e-6;  // ms
  }

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  if (qr.rank() < cols) throw RankDeficient{};
  const Eigen::VectorXd beta = qr.solve(y);

  FitResult fit;
  fit.ms_per_comp = beta(0);
  if (with_quadrics) fit.ms_per_quadric = beta(1);
  fit.const_ms = beta(cols - 1);
  fit.residual_ms2 = (x * beta - y).squaredNorm();
  return fit;
}

}  // namespace

FitResult fit_line(const std::vector<TimingRecord>& records, int warmup) {
  return ols(records, warmup, false);
}

FitResult fit_plane(const std::vector<TimingRecord>& records, int warmup) {
  return ols(records, warmup, true);
}

double adjusted_r_squared(const std::vector<TimingRecord>& records, const FitResult& fit,
                          int warmup) {
  const double per_quadric = fit.ms_per_quadric.value_or(0.0);
  double sum_x = 0, sum_y = 0, n = 0;
  for (const TimingRecord& r : records) {
    if (r.line_index < warmup) continue;
    sum_x += static_cast<double>(r.comparisons);
    sum_y += static_cast<double>(r.elapsed_ns) * 1e-6 - per_quadric * r.quadrics;
    n += 1;
  }
  if (n < 3) return 0.0;
  const double mx = sum_x / n, my = sum_y / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (const TimingRecord& r : records) {
    if (r.line_index < warmup) continue;
    const double dx = static_cast<double>(r.comparisons) - mx;
    const double dy = static_cast<double>(r.elapsed_ns) * 1e-6 - per_quadric * r.quadrics - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return (sxy * sxy) / (sxx * syy);
}

std::string format_report(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "Scene" << std::setw(12) << "Method" << std::right
      << std::setw(8) << "Errors" << std::setw(14) << "ms/Quadric" << std::setw(14) << "ms/Comp"
      << std::setw(14) << "Const ms" << std::setw(16) << "SumResid ms^2" << "\n";
  for (const ReportRow& r : rows) {
    out << std::left << std::setw(18) << r.scene << std::setw(12) << r.method << std::right
        << std::setw(8);
    if (r.errors.has_value()) {
      out << *r.errors;
    } else {
      out << "---";
    }
    out << std::setw(14);
    if (r.fit.ms_per_quadric.has_value()) {
      out << std::setprecision(5) << *r.fit.ms_per_quadric;
    } else {
      out << "--";
    }
    out << std::setw(14) << std::setprecision(5) << r.fit.ms_per_comp  //
        << std::setw(14) << std::setprecision(5) << r.fit.const_ms     //
        << std::setw(16) << std::setprecision(6) << r.fit.residual_ms2 << "\n";
  }
  return out.str();
}

void write_adjusted_csv(const std::vector<TimingRecord>& records, const FitResult& fit,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open csv for writing: " + path);
  const double per_quadric = fit.ms_per_quadric.value_or(0.0);
  out << "comparisons,adjusted_time_ms\n";
  for (const TimingRecord& r : records) {
    const double adj = static_cast<double>(r.elapsed_ns) * 1e-6 - per_quadric * r.quadrics;
    out << r.comparisons << "," << std::setprecision(10) << adj << "\n";
  }
}

void write_records_csv(const std::vector<TimingRecord>& records,
                       const std::map<std::string, std::string>& meta, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open csv for writing: " + path);
  for (const auto& [k, v] : meta) out << "# " << k << " " << v << "\n";
  out << "line_index,quadrics,comparisons_escalated,elapsed_ns,error_flag\n";
  for (const TimingRecord& r : records) {
    out << r.line_index << "," << r.quadrics << "," << r.comparisons << "," << r.elapsed_ns << ","
        << (r.error ? 1 : 0) << "\n";
  }
}

std::vector<TimingRecord> read_records_csv(const std::string& path,
                                           std::map<std::string, std::string>* meta) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open csv: " + path);
  std::vector<TimingRecord> out;
  std::string lin;
  while (std::getline(in, lin)) {
    if (lin.empty()) continue;
    if (lin[0] == '#') {
      if (meta != nullptr) {
        std::istringstream ss(lin.substr(1));
        std::string k, v;
        ss >> k;
        std::getline(ss, v);
        if (!v.empty() && v.front() == ' ') v.erase(0, 1);
        (*meta)[k] = v;
      }
      continue;
    }
    if (lin.rfind("line_index", 0) == 0) continue;  // header
    TimingRecord r;
    int err = 0;
    if (std::sscanf(lin.c_str(), "%d,%d,%lld,%lld,%d", &r.line_index, &r.quadrics, &r.comparisons,
                    &r.elapsed_ns, &err) == 5) {
      r.error = err != 0;
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace qorder

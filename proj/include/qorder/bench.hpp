// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qorder/tracker.hpp"

namespace qorder {

//! One line's measurement: scene size, the method's comparison regressor
//! (escalation count for the accurate methods, total comparator calls for
//! the approximate one), wall time of the intersect+sort pipeline, and the
//! exact-order disagreement flag.
struct TimingRecord {
  int line_index = 0;
  int quadrics = 0;
  long long comparisons = 0;
  long long elapsed_ns = 0;
  bool error = false;
};

struct RunConfig {
  Method method = Method::Resultant;
  int lines = 1000;
  std::uint64_t seed = 1;
  TrackerConfig tracker;
  LineScreen screen;
  int workers = 1;    // 1 = serial reference; >1 parallelizes across lines
  bool score = true;  // oracle scoring (outside the timed region)
};

//! Runs the per-line pipeline over `lines` sampled lines. Lines are
//! independent and deterministic given (seed, line index): the parallel scan
//! produces bit-identical records to the serial reference. Timing runs
//! should use workers == 1; per-line wall time is recorded either way.
std::vector<TimingRecord> run_experiment(const Scene& scene, const RunConfig& cfg);

//! Least-squares fit coefficients in milliseconds, plus the sum of squared
//! residuals (ms^2).
struct FitResult {
  double ms_per_comp = 0;
  std::optional<double> ms_per_quadric;  // plane fit only
  double const_ms = 0;
  double residual_ms2 = 0;
};

//! time ~ ms_per_comp * comparisons + const. The first `warmup` lines are
//! excluded from the fit (they still carry error tallies). Throws
//! RankDeficient when every record has the same comparison count.
FitResult fit_line(const std::vector<TimingRecord>& records, int warmup = 10);

//! time ~ ms_per_comp * comparisons + ms_per_quadric * quadrics + const.
//! Throws RankDeficient on collinear regressors (e.g. a single scene size).
FitResult fit_plane(const std::vector<TimingRecord>& records, int warmup = 10);

//! Coefficient of determination of time-minus-quadric-term against the
//! comparison count, using the plane fit's coefficients.
double adjusted_r_squared(const std::vector<TimingRecord>& records, const FitResult& fit,
                          int warmup = 10);

struct ReportRow {
  std::string scene;
  std::string method;
  std::optional<long long> errors;  // absent prints as "---"
  FitResult fit;
};

//! Table-shaped text report: Scene, Method, Errors, ms/Quadric, ms/Comp,
//! Const ms, sum of squared residuals.
std::string format_report(const std::vector<ReportRow>& rows);

//! (comparisons, adjusted time ms) pairs for external plotting: the fitted
//! per-quadric term is subtracted from each line's time.
void write_adjusted_csv(const std::vector<TimingRecord>& records, const FitResult& fit,
                        const std::string& path);

//! Record CSV with '# key value' metadata header; columns
//! line_index,quadrics,comparisons_escalated,elapsed_ns,error_flag.
void write_records_csv(const std::vector<TimingRecord>& records,
                       const std::map<std::string, std::string>& meta, const std::string& path);
std::vector<TimingRecord> read_records_csv(const std::string& path,
                                           std::map<std::string, std::string>* meta = nullptr);

}  // namespace qorder

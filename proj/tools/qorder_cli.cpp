// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: scene generation, experiment runs, least-squares
// fits of the timing data and aggregated reports.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>

#include "qorder/bench.hpp"

namespace {

using namespace qorder;

Scene make_scene(const std::string& kind, int n) {
  if (kind == "packed") return gen_packed_spheres();
  if (kind == "nested") return gen_nested_spheres(n);
  throw CLI::ValidationError("kind must be 'packed' or 'nested'");
}

Method parse_method(const std::string& m) {
  if (m == "approx") return Method::Approx;
  if (m == "extended") return Method::Extended;
  if (m == "resultant") return Method::Resultant;
  throw CLI::ValidationError("method must be approx, extended or resultant");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Approx: return "approx";
    case Method::Extended: return "extended";
    default: return "resultant";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ordering of line-quadric intersections: scenes, runs, fits"};
  app.require_subcommand(1);

  // gen-scene
  auto* gen = app.add_subcommand("gen-scene", "generate a scene file");
  std::string gen_kind = "nested";
  int gen_n = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "scene.txt";
  gen->add_option("--kind", gen_kind, "packed|nested");
  gen->add_option("--n", gen_n, "sphere count for nested scenes");
  gen->add_option("--seed", gen_seed, "accepted for interface symmetry; scenes are deterministic");
  gen->add_option("--out", gen_out, "output path")->required();

  // run
  auto* run = app.add_subcommand("run", "run an experiment and write a record CSV");
  std::string run_scene_path, run_kind, run_method = "resultant", run_out = "run.csv";
  int run_n = 10, run_lines = 1000, run_threshold = -16, run_mult = 24, run_workers = 1;
  std::uint64_t run_seed = 1;
  bool run_no_score = false;
  run->add_option("--scene", run_scene_path, "scene file (alternative to --kind/--n)");
  run->add_option("--kind", run_kind, "packed|nested");
  run->add_option("--n", run_n, "sphere count for nested scenes");
  run->add_option("--method", run_method, "approx|extended|resultant");
  run->add_option("--lines", run_lines, "number of sampled lines");
  run->add_option("--seed", run_seed, "experiment seed");
  run->add_option("--threshold-exp", run_threshold, "escalation threshold exponent (default -16)");
  run->add_option("--prec-mult", run_mult, "top precision multiplier (default 24)");
  run->add_option("--workers", run_workers, "1 = serial (use for timing); >1 parallel scan");
  run->add_flag("--no-score", run_no_score, "skip exact-order scoring");
  run->add_option("--out", run_out, "output CSV")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "least-squares fit of a record CSV");
  std::string fit_csv, fit_model = "line";
  int fit_warmup = 10;
  fit->add_option("--csv", fit_csv, "input record CSV")->required();
  fit->add_option("--model", fit_model, "line|plane");
  fit->add_option("--warmup", fit_warmup, "lines excluded from the fit");

  // report
  auto* rep = app.add_subcommand("report", "aggregate run CSVs into a table");
  std::vector<std::string> rep_csvs;
  std::string rep_fig;
  int rep_warmup = 10;
  rep->add_option("--csv", rep_csvs, "record CSVs (fits pool rows per file)")->required();
  rep->add_option("--adjusted-csv", rep_fig,
                  "write (comparisons, time minus quadric term) pairs for the last CSV");
  rep->add_option("--warmup", rep_warmup, "lines excluded from fits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const Scene scene = make_scene(gen_kind, gen_n);
      save_scene_file(scene, gen_out);
      std::cout << "wrote " << scene.quadrics.size() << " quadrics to " << gen_out << "\n";
      return 0;
    }

    if (*run) {
      Scene scene;
      if (!run_scene_path.empty()) {
        scene = load_scene_file(run_scene_path);
      } else {
        scene = make_scene(run_kind, run_n);
      }
      RunConfig cfg;
      cfg.method = parse_method(run_method);
      cfg.lines = run_lines;
      cfg.seed = run_seed;
      cfg.tracker.threshold_exp = run_threshold;
      cfg.tracker.sched = PrecisionSchedule::from_multiplier(kStorageBits, run_mult);
      cfg.workers = run_workers;
      cfg.score = !run_no_score;

      const auto records = run_experiment(scene, cfg);
      long long errors = 0;
      for (const auto& r : records) errors += r.error ? 1 : 0;

      std::map<std::string, std::string> meta;
      meta["scene"] = (scene.kind == SceneKind::PackedSpheres) ? "packed" : "nested";
      meta["n"] = std::to_string(scene.n);
      meta["method"] = run_method;
      meta["lines"] = std::to_string(run_lines);
      meta["seed"] = std::to_string(run_seed);
      meta["threshold_exp"] = std::to_string(run_threshold);
      meta["prec_mult"] = std::to_string(run_mult);
      write_records_csv(records, meta, run_out);
      std::cout << "lines " << run_lines << "  error_lines " << errors << "  -> " << run_out
                << "\n";
      return 0;
    }

    if (*fit) {
      const auto records = read_records_csv(fit_csv);
      const FitResult f =
          (fit_model == "plane") ? fit_plane(records, fit_warmup) : fit_line(records, fit_warmup);
      std::cout << "ms_per_comp " << f.ms_per_comp << "\n";
      if (f.ms_per_quadric.has_value()) std::cout << "ms_per_quadric " << *f.ms_per_quadric << "\n";
      std::cout << "const_ms " << f.const_ms << "\n";
      std::cout << "residual_ms2 " << f.residual_ms2 << "\n";
      return 0;
    }

    if (*rep) {
      std::vector<ReportRow> rows;
      std::vector<TimingRecord> last;
      FitResult last_fit;
      for (const std::string& path : rep_csvs) {
        std::map<std::string, std::string> meta;
        const auto records = read_records_csv(path, &meta);
        ReportRow row;
        row.scene = meta.count("scene") ? meta["scene"] + " n=" + meta["n"] : path;
        row.method = meta.count("method") ? meta["method"] : "?";
        // The fit needs a second regressor only when scene sizes vary;
        // fall back to the line fit for single-size runs.
        try {
          row.fit = fit_plane(records, rep_warmup);
        } catch (const RankDeficient&) {
          row.fit = fit_line(records, rep_warmup);
        }
        if (row.method == "resultant") {
          row.errors.reset();  // exact by construction; printed as ---
        } else {
          long long errors = 0;
          for (const auto& r : records) errors += r.error ? 1 : 0;
          row.errors = errors;
        }
        rows.push_back(row);
        last = records;
        last_fit = row.fit;
      }
      std::cout << format_report(rows);
      if (!rep_fig.empty() && !last.empty()) {
        write_adjusted_csv(last, last_fit, rep_fig);
        std::cout << "adjusted pairs -> " << rep_fig << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

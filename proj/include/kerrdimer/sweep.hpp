// Copyright 2026 The kerrdimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// (J/kappa, U/kappa) grid sweeps. Every grid point is an independent
// build -> assemble -> solve -> evaluate pipeline; run_sweep spreads points
// over OpenMP threads and run_sweep_serial is the single-threaded reference.
// Both fill a buffer indexed by grid position, so output order is J-major,
// U-minor regardless of schedule.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerrdimer/model.hpp"
#include "kerrdimer/observables.hpp"
#include "kerrdimer/steady_state.hpp"

namespace kerr {

enum class Spacing { log, linear };
enum class SolverChoice { nullspace, evolve, both };
enum class OutputFormat { csv, json };

std::string_view to_string(Spacing s);
std::string_view to_string(SolverChoice s);
std::string_view to_string(OutputFormat f);
SolverChoice parse_solver(std::string_view s);
OutputFormat parse_format(std::string_view s);

struct GridAxis {
  double min = 0.1;
  double max = 10.0;
  int steps = 21;
  Spacing spacing = Spacing::log;

  /// Parses "min:max:steps[:log|linear]" (spacing defaults to log).
  static GridAxis parse(std::string_view text);
  std::string to_string() const;
  void validate(const char* name) const;
  /// Grid values, endpoints exact.
  std::vector<double> values() const;
};

struct SweepConfig {
  Exchange model = Exchange::single;
  double f_over_kappa = 0.1;
  GridAxis j_grid;
  GridAxis u_grid;
  int dim = 4;
  SolverChoice solver = SolverChoice::nullspace;
  bool convergence_check = false;
  int convergence_dim = 8;
  std::string output;
  OutputFormat format = OutputFormat::csv;
  int threads = 0;  // 0 = auto
  double kappa_mhz_over_2pi = 0.4;
  EvolveOptions evolve;

  /// Throws ConfigError.
  void validate() const;
};

/// Columns shared by CSV output, summaries and convergence reports.
inline constexpr std::array<std::string_view, 11> kObservableNames = {
    "g2", "zeta", "c_i", "lambda1", "lambda2", "entropy", "log_negativity", "impurity",
    "n1", "n2", "n_total"};

/// Value of a named observable; empty only for an undefined g2.
std::optional<double> observable_value(const ObservableRecord& r, std::string_view name);

struct PointResult {
  size_t index = 0;  // position in the full grid
  double j_over_kappa = 0.0;
  double u_over_kappa = 0.0;
  ObservableRecord record;
  std::optional<double> solver_trace_distance;  // solver == both
  std::optional<ObservableRecord> check_record;  // convergence_check
};

struct PointFailure {
  size_t index = 0;
  double j_over_kappa = 0.0;
  double u_over_kappa = 0.0;
  std::string message;
};

struct ColumnRange {
  std::string name;
  std::optional<double> min;
  std::optional<double> max;
};

/// Deviation of the base-dimension observables from the convergence_dim run.
/// Relative where the reference magnitude is >= 1e-3, absolute otherwise.
struct ConvergenceEntry {
  std::string name;
  double max_relative = 0.0;
  double max_absolute_small = 0.0;
  bool within_tolerance = true;  // rel <= 1e-3 and abs <= 1e-6
};

inline constexpr double kConvergenceRelTol = 1e-3;
inline constexpr double kConvergenceAbsTol = 1e-6;
inline constexpr double kConvergenceSmall = 1e-3;

struct SweepResult {
  SweepConfig config;
  std::vector<PointResult> points;
  std::vector<PointFailure> failures;
  std::vector<ColumnRange> summary;
  std::vector<ConvergenceEntry> convergence;  // empty unless convergence_check
  std::optional<double> max_solver_trace_distance;
};

/// Solves one grid point. Throws on solver failure.
PointResult evaluate_point(const SweepConfig& cfg, double j_over_kappa, double u_over_kappa,
                           const ObservableEvaluator& base,
                           const ObservableEvaluator* check = nullptr);

/// OpenMP-parallel sweep. Throws ConfigError for an invalid config and
/// SweepError when every point failed.
SweepResult run_sweep(const SweepConfig& cfg);

/// Single-threaded reference with identical results.
SweepResult run_sweep_serial(const SweepConfig& cfg);

/// Column extrema over the given points.
std::vector<ColumnRange> summarize(const std::vector<PointResult>& points);

/// Per-observable deviations between record and check_record.
std::vector<ConvergenceEntry> convergence_report(const std::vector<PointResult>& points);

}  // namespace kerr

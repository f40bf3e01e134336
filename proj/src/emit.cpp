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

#include "kerrdimer/emit.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "kerrdimer/error.hpp"

namespace kerr {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_emitted(v);
}

ordered_json number(const std::optional<double>& v) { return v ? number(*v) : ordered_json(nullptr); }

ordered_json config_json(const SweepConfig& c) {
  ordered_json j;
  j["model"] = to_string(c.model);
  j["drive_f_over_kappa"] = number(c.f_over_kappa);
  j["j_grid"] = c.j_grid.to_string();
  j["u_grid"] = c.u_grid.to_string();
  j["dim"] = c.dim;
  j["solver"] = to_string(c.solver);
  j["convergence_check"] = c.convergence_check;
  if (c.convergence_check) j["convergence_dim"] = c.convergence_dim;
  j["format"] = to_string(c.format);
  j["threads"] = c.threads;
  j["kappa_mhz_over_2pi"] = number(c.kappa_mhz_over_2pi);
  if (c.solver != SolverChoice::nullspace) {
    j["evolve_dt"] = number(c.evolve.dt);
    j["evolve_t_max"] = number(c.evolve.t_max);
  }
  return j;
}

ordered_json record_json(const ObservableRecord& r) {
  ordered_json j;
  for (std::string_view name : kObservableNames) j[std::string(name)] = number(observable_value(r, name));
  j["residual"] = number(r.meta.residual);
  return j;
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kEmitDigits, v);
  return buf;
}

double round_emitted(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  for (size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) out << ',';
    out << kCsvColumns[i];
  }
  out << '\n';
  for (const PointResult& p : result.points) {
    out << format_number(p.j_over_kappa) << ',' << format_number(p.u_over_kappa);
    for (std::string_view name : kObservableNames) {
      const std::optional<double> v = observable_value(p.record, name);
      out << ',' << (v ? format_number(*v) : std::string());
    }
    out << ',' << format_number(p.record.meta.residual) << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out, const EmitOptions& opts) {
  ordered_json doc;
  ordered_json meta;
  meta["generator"] = "kerrdimer";
  if (opts.timestamp) meta["timestamp"] = *opts.timestamp;
  meta["units"] = "all rates in units of the cavity loss rate kappa";
  meta["tensor_order"] = "cavity-1-major, index = i1 * dim + i2";
  meta["zeta_particle_number"] = "N = <n1 + n2> of the steady state, used in both N/2 and (N - 1)";
  meta["entropy_log_base"] = "e";
  meta["log_negativity_log_base"] = 2;
  doc["metadata"] = std::move(meta);
  doc["config"] = config_json(result.config);

  ordered_json points = ordered_json::array();
  for (const PointResult& p : result.points) {
    ordered_json j;
    j["j_over_kappa"] = number(p.j_over_kappa);
    j["u_over_kappa"] = number(p.u_over_kappa);
    const ordered_json rec = record_json(p.record);
    for (const auto& item : rec.items()) j[item.key()] = item.value();
    j["solver"] = p.record.meta.solver;
    j["dim"] = p.record.meta.dim;
    if (p.solver_trace_distance) j["solver_trace_distance"] = number(*p.solver_trace_distance);
    if (p.check_record) j["check"] = record_json(*p.check_record);
    points.push_back(std::move(j));
  }
  doc["points"] = std::move(points);

  ordered_json summary;
  for (const ColumnRange& c : result.summary) {
    summary[c.name] = {{"min", number(c.min)}, {"max", number(c.max)}};
  }
  if (result.max_solver_trace_distance) {
    summary["max_solver_trace_distance"] = number(*result.max_solver_trace_distance);
  }
  doc["summary"] = std::move(summary);

  ordered_json failures = ordered_json::array();
  for (const PointFailure& f : result.failures) {
    failures.push_back({{"j_over_kappa", number(f.j_over_kappa)},
                        {"u_over_kappa", number(f.u_over_kappa)},
                        {"message", f.message}});
  }
  doc["failures"] = std::move(failures);

  if (!result.convergence.empty()) {
    ordered_json conv;
    conv["reference_dim"] = result.config.convergence_dim;
    conv["rel_tol"] = kConvergenceRelTol;
    conv["abs_tol_below_1e-3"] = kConvergenceAbsTol;
    ordered_json cols;
    bool all_ok = true;
    for (const ConvergenceEntry& e : result.convergence) {
      cols[e.name] = {{"max_relative", number(e.max_relative)},
                      {"max_absolute_small", number(e.max_absolute_small)},
                      {"within_tolerance", e.within_tolerance}};
      all_ok = all_ok && e.within_tolerance;
    }
    conv["observables"] = std::move(cols);
    conv["within_tolerance"] = all_ok;
    doc["convergence"] = std::move(conv);
  }
  out << doc.dump(2) << '\n';
}

void emit(const SweepResult& result, OutputFormat format, const std::string& path,
          const EmitOptions& opts) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (format == OutputFormat::csv) {
    write_csv(result, out);
  } else {
    write_json(result, out, opts);
  }
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace kerr

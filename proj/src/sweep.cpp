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

#include "kerrdimer/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <memory>
#include <variant>

#include "kerrdimer/error.hpp"
#include "kerrdimer/liouvillian.hpp"

namespace kerr {

namespace {

double parse_double(std::string_view s, std::string_view what) {
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw ConfigError("grid: cannot parse " + std::string(what) + " '" + buf + "'");
  }
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("grid: cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

using Slot = std::variant<std::monostate, PointResult, PointFailure>;

struct Prepared {
  std::vector<double> js;
  std::vector<double> us;
  std::unique_ptr<ObservableEvaluator> base;
  std::unique_ptr<ObservableEvaluator> check;
};

Prepared prepare(const SweepConfig& cfg) {
  cfg.validate();
  Prepared p;
  p.js = cfg.j_grid.values();
  p.us = cfg.u_grid.values();
  p.base = std::make_unique<ObservableEvaluator>(cfg.dim);
  if (cfg.convergence_check) p.check = std::make_unique<ObservableEvaluator>(cfg.convergence_dim);
  return p;
}

// The per-point kernel. Never throws.
Slot run_point(const SweepConfig& cfg, const Prepared& p, size_t index) {
  const size_t nu = p.us.size();
  const double j = p.js[index / nu];
  const double u = p.us[index % nu];
  try {
    PointResult r = evaluate_point(cfg, j, u, *p.base, p.check.get());
    r.index = index;
    return r;
  } catch (const std::exception& e) {
    return PointFailure{index, j, u, e.what()};
  }
}

SweepResult collect(const SweepConfig& cfg, std::vector<Slot>& slots) {
  SweepResult out;
  out.config = cfg;
  for (Slot& s : slots) {
    if (auto* r = std::get_if<PointResult>(&s)) {
      out.points.push_back(std::move(*r));
    } else if (auto* f = std::get_if<PointFailure>(&s)) {
      out.failures.push_back(std::move(*f));
    }
  }
  if (out.points.empty()) {
    std::string msg = "sweep: all " + std::to_string(slots.size()) + " grid points failed";
    if (!out.failures.empty()) msg += " (first: " + out.failures.front().message + ")";
    throw SweepError(msg);
  }
  out.summary = summarize(out.points);
  if (cfg.convergence_check) out.convergence = convergence_report(out.points);
  for (const PointResult& r : out.points) {
    if (!r.solver_trace_distance) continue;
    out.max_solver_trace_distance =
        std::max(out.max_solver_trace_distance.value_or(0.0), *r.solver_trace_distance);
  }
  return out;
}

SteadyStateSolution solve_with(SolverChoice choice, const SuperOperator& l, int d,
                               const EvolveOptions& opts) {
  if (choice == SolverChoice::evolve) return solve_evolve(l, d, d, opts);
  return solve_nullspace(l, d, d);
}

}  // namespace

std::string_view to_string(Spacing s) { return s == Spacing::log ? "log" : "linear"; }

std::string_view to_string(SolverChoice s) {
  switch (s) {
    case SolverChoice::nullspace: return "nullspace";
    case SolverChoice::evolve: return "evolve";
    case SolverChoice::both: return "both";
  }
  return "nullspace";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

SolverChoice parse_solver(std::string_view s) {
  if (s == "nullspace") return SolverChoice::nullspace;
  if (s == "evolve") return SolverChoice::evolve;
  if (s == "both") return SolverChoice::both;
  throw ConfigError("unknown solver '" + std::string(s) + "' (expected nullspace|evolve|both)");
}

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected csv|json)");
}

GridAxis GridAxis::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw ConfigError("grid '" + std::string(text) + "': expected min:max:steps[:log|linear]");
  }
  GridAxis g;
  g.min = parse_double(parts[0], "min");
  g.max = parse_double(parts[1], "max");
  g.steps = parse_int(parts[2], "steps");
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.spacing = Spacing::log;
    } else if (parts[3] == "linear") {
      g.spacing = Spacing::linear;
    } else {
      throw ConfigError("grid '" + std::string(text) + "': spacing must be log or linear");
    }
  }
  return g;
}

std::string GridAxis::to_string() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.9g:%.9g:%d:%s", min, max, steps,
                spacing == Spacing::log ? "log" : "linear");
  return buf;
}

void GridAxis::validate(const char* name) const {
  const std::string n(name);
  if (steps < 1) throw ConfigError(n + " grid: steps must be >= 1");
  if (!std::isfinite(min) || !std::isfinite(max)) throw ConfigError(n + " grid: bounds must be finite");
  if (min < 0.0) throw ConfigError(n + " grid: rates must be >= 0");
  if (min > max) throw ConfigError(n + " grid: min > max");
  if (spacing == Spacing::log && !(min > 0.0)) throw ConfigError(n + " grid: log spacing needs min > 0");
}

std::vector<double> GridAxis::values() const {
  std::vector<double> v(static_cast<size_t>(steps));
  if (steps == 1) {
    v[0] = min;
    return v;
  }
  const double last = static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / last;
    v[static_cast<size_t>(i)] = spacing == Spacing::log
                                    ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                                    : min + t * (max - min);
  }
  v.front() = min;
  v.back() = max;
  return v;
}

void SweepConfig::validate() const {
  j_grid.validate("j");
  u_grid.validate("u");
  if (dim < 2) throw ConfigError("dim must be >= 2");
  if (convergence_check && convergence_dim < 2) throw ConfigError("convergence dim must be >= 2");
  if (!std::isfinite(f_over_kappa) || f_over_kappa < 0.0) throw ConfigError("drive must be finite and >= 0");
  if (threads < 0) throw ConfigError("threads must be >= 0 (0 = auto)");
  if (!std::isfinite(kappa_mhz_over_2pi) || kappa_mhz_over_2pi <= 0.0) {
    throw ConfigError("kappa_mhz_over_2pi must be > 0");
  }
  if (!(evolve.dt > 0.0) || evolve.dt > 0.05) throw ConfigError("evolve dt must be in (0, 0.05]");
  if (!(evolve.t_max >= 50.0)) throw ConfigError("evolve t_max must be >= 50");
}

std::optional<double> observable_value(const ObservableRecord& r, std::string_view name) {
  if (name == "g2") return r.g2;
  if (name == "zeta") return r.zeta;
  if (name == "c_i") return r.c_i;
  if (name == "lambda1") return r.lambda1;
  if (name == "lambda2") return r.lambda2;
  if (name == "entropy") return r.entropy;
  if (name == "log_negativity") return r.log_negativity;
  if (name == "impurity") return r.impurity;
  if (name == "n1") return r.n1;
  if (name == "n2") return r.n2;
  if (name == "n_total") return r.n_total;
  if (name == "residual") return r.meta.residual;
  throw InvalidDimension("observable_value: unknown column '" + std::string(name) + "'");
}

PointResult evaluate_point(const SweepConfig& cfg, double j, double u, const ObservableEvaluator& base,
                           const ObservableEvaluator* check) {
  auto solve_at = [&](int dim, SolverChoice choice) {
    ModelParams p;
    p.exchange = cfg.model;
    p.u_over_kappa = u;
    p.j_over_kappa = j;
    p.f_over_kappa = cfg.f_over_kappa;
    p.kappa_mhz_over_2pi = cfg.kappa_mhz_over_2pi;
    p.dim = dim;
    const SuperOperator l = build_liouvillian(build_hamiltonian(p), 1.0, dim);
    SteadyStateSolution primary = solve_with(choice, l, dim, cfg.evolve);
    std::optional<double> cross;
    if (choice == SolverChoice::both) {
      const SteadyStateSolution other = solve_evolve(l, dim, dim, cfg.evolve);
      cross = trace_distance(primary.rho.op(), other.rho.op());
    }
    return std::pair{std::move(primary), cross};
  };

  PointResult out;
  out.j_over_kappa = j;
  out.u_over_kappa = u;
  auto [sol, cross] = solve_at(cfg.dim, cfg.solver);
  RecordMeta meta;
  meta.solver = std::string(to_string(cfg.solver));
  meta.residual = sol.residual;
  out.record = base.evaluate(sol.rho, meta);
  out.solver_trace_distance = cross;

  if (check != nullptr) {
    auto [ref, unused] = solve_at(check->dim(), SolverChoice::nullspace);
    RecordMeta ref_meta;
    ref_meta.residual = ref.residual;
    out.check_record = check->evaluate(ref.rho, ref_meta);
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  const Prepared p = prepare(cfg);
  const size_t n = p.js.size() * p.us.size();
  std::vector<Slot> slots(n);
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const auto count = static_cast<long>(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    slots[static_cast<size_t>(i)] = run_point(cfg, p, static_cast<size_t>(i));
  }
  return collect(cfg, slots);
}

SweepResult run_sweep_serial(const SweepConfig& cfg) {
  const Prepared p = prepare(cfg);
  const size_t n = p.js.size() * p.us.size();
  std::vector<Slot> slots(n);
  for (size_t i = 0; i < n; ++i) slots[i] = run_point(cfg, p, i);
  return collect(cfg, slots);
}

std::vector<ColumnRange> summarize(const std::vector<PointResult>& points) {
  std::vector<ColumnRange> out;
  for (std::string_view name : kObservableNames) {
    ColumnRange c{std::string(name), std::nullopt, std::nullopt};
    for (const PointResult& r : points) {
      const std::optional<double> v = observable_value(r.record, name);
      if (!v) continue;
      c.min = c.min ? std::min(*c.min, *v) : *v;
      c.max = c.max ? std::max(*c.max, *v) : *v;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConvergenceEntry> convergence_report(const std::vector<PointResult>& points) {
  std::vector<ConvergenceEntry> out;
  for (std::string_view name : kObservableNames) {
    ConvergenceEntry e{std::string(name)};
    for (const PointResult& r : points) {
      if (!r.check_record) continue;
      const std::optional<double> a = observable_value(r.record, name);
      const std::optional<double> ref = observable_value(*r.check_record, name);
      if (!a || !ref) {
        if (a.has_value() != ref.has_value()) e.within_tolerance = false;
        continue;
      }
      const double delta = std::abs(*a - *ref);
      if (std::abs(*ref) >= kConvergenceSmall) {
        e.max_relative = std::max(e.max_relative, delta / std::abs(*ref));
      } else {
        e.max_absolute_small = std::max(e.max_absolute_small, delta);
      }
    }
    e.within_tolerance = e.within_tolerance && e.max_relative <= kConvergenceRelTol &&
                         e.max_absolute_small <= kConvergenceAbsTol;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace kerr

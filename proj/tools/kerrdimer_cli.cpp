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

// kerrdimer sweep --model {single|two} --drive F --j min:max:steps[:log|linear]
//                 --u ... --dim n --solver {nullspace|evolve|both}
//                 --convergence-check --format {csv|json} --out path
//                 --threads {n|auto} [--config file]
//
// Exit codes: 0 success, 1 partial failures, 2 configuration error,
// 3 total failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kerrdimer/emit.hpp"
#include "kerrdimer/error.hpp"
#include "kerrdimer/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFailed = 3;

struct RawSweepArgs {
  std::string model = "single";
  double drive = 0.1;
  std::string j = "0.1:10:21:log";
  std::string u = "0.1:10:21:log";
  int dim = 4;
  std::string solver = "nullspace";
  bool convergence_check = false;
  std::string format = "csv";
  std::string out = "-";
  std::string threads = "auto";
  double kappa_mhz = 0.4;
};

kerr::SweepConfig to_config(const RawSweepArgs& a) {
  kerr::SweepConfig cfg;
  cfg.model = kerr::parse_exchange(a.model);
  cfg.f_over_kappa = a.drive;
  cfg.j_grid = kerr::GridAxis::parse(a.j);
  cfg.u_grid = kerr::GridAxis::parse(a.u);
  cfg.dim = a.dim;
  cfg.solver = kerr::parse_solver(a.solver);
  cfg.convergence_check = a.convergence_check;
  cfg.format = kerr::parse_format(a.format);
  cfg.output = a.out;
  cfg.kappa_mhz_over_2pi = a.kappa_mhz;
  if (a.threads == "auto") {
    cfg.threads = 0;
  } else {
    try {
      size_t used = 0;
      cfg.threads = std::stoi(a.threads, &used);
      if (used != a.threads.size() || cfg.threads < 1) throw std::invalid_argument(a.threads);
    } catch (const std::exception&) {
      throw kerr::ConfigError("threads must be a positive integer or 'auto', got '" + a.threads + "'");
    }
  }
  cfg.validate();
  return cfg;
}

void print_summary(const kerr::SweepResult& r, double seconds) {
  std::fprintf(stderr, "%zu points, %zu failures, %.2f s\n", r.points.size(), r.failures.size(), seconds);
  for (const kerr::ColumnRange& c : r.summary) {
    std::fprintf(stderr, "  %-15s min %-16s max %s\n", c.name.c_str(),
                 c.min ? kerr::format_number(*c.min).c_str() : "null",
                 c.max ? kerr::format_number(*c.max).c_str() : "null");
  }
  if (r.max_solver_trace_distance) {
    std::fprintf(stderr, "  max nullspace/evolve trace distance %s\n",
                 kerr::format_number(*r.max_solver_trace_distance).c_str());
  }
  for (const kerr::ConvergenceEntry& e : r.convergence) {
    std::fprintf(stderr, "  dim %d vs %d %-15s rel %-14s abs(<1e-3) %-14s %s\n", r.config.dim,
                 r.config.convergence_dim, e.name.c_str(), kerr::format_number(e.max_relative).c_str(),
                 kerr::format_number(e.max_absolute_small).c_str(), e.within_tolerance ? "ok" : "EXCEEDS");
  }
  for (const kerr::PointFailure& f : r.failures) {
    std::fprintf(stderr, "  failed at J/kappa=%s U/kappa=%s: %s\n", kerr::format_number(f.j_over_kappa).c_str(),
                 kerr::format_number(f.u_over_kappa).c_str(), f.message.c_str());
  }
}

// Fills options the command line left unset from a flat key=value file.
// Keys are flag names without the leading dashes; '_' and '-' are equivalent.
void apply_config_file(CLI::App& sweep, const std::string& path) {
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (!item.parents.empty()) {
      throw kerr::ConfigError("config file: sections are not supported ('" + item.fullname() + "')");
    }
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    CLI::Option* opt = key == "config" ? nullptr : sweep.get_option_no_throw("--" + key);
    if (opt == nullptr) throw kerr::ConfigError("config file: unknown key '" + item.name + "'");
    if (opt->count() > 0) continue;
    for (const std::string& v : item.inputs) opt->add_result(v);
    opt->run_callback();
  }
}

int run_sweep_command(const RawSweepArgs& args) {
  kerr::SweepConfig cfg;
  try {
    cfg = to_config(args);
  } catch (const kerr::Error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  kerr::SweepResult result;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    result = kerr::run_sweep(cfg);
  } catch (const kerr::SweepError& e) {
    std::cerr << "sweep failed: " << e.what() << '\n';
    return kExitFailed;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  kerr::EmitOptions opts;
  opts.timestamp = kerr::utc_timestamp();
  try {
    if (cfg.output.empty() || cfg.output == "-") {
      if (cfg.format == kerr::OutputFormat::csv) {
        kerr::write_csv(result, std::cout);
      } else {
        kerr::write_json(result, std::cout, opts);
      }
    } else {
      kerr::emit(result, cfg.format, cfg.output, opts);
    }
  } catch (const kerr::IoError& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kExitFailed;
  }
  print_summary(result, seconds);
  return result.failures.empty() ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady states of two driven Kerr cavities with single- or two-photon exchange"};
  app.require_subcommand(1);

  RawSweepArgs args;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep a (J/kappa, U/kappa) grid and emit all observables");
  sweep->add_option("--model", args.model, "Exchange type")->check(CLI::IsMember({"single", "two"}))->capture_default_str();
  sweep->add_option("--drive", args.drive, "Drive amplitude F/kappa")->capture_default_str();
  sweep->add_option("--j", args.j, "J/kappa grid min:max:steps[:log|linear]")->capture_default_str();
  sweep->add_option("--u", args.u, "U/kappa grid min:max:steps[:log|linear]")->capture_default_str();
  sweep->add_option("--dim", args.dim, "Fock dimension per cavity")->capture_default_str();
  sweep->add_option("--solver", args.solver, "Steady-state solver")
      ->check(CLI::IsMember({"nullspace", "evolve", "both"}))
      ->capture_default_str();
  sweep->add_flag("--convergence-check", args.convergence_check, "Re-solve at dim 8 and report deviations");
  sweep->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sweep->add_option("--out", args.out, "Output path ('-' for stdout)")->capture_default_str();
  sweep->add_option("--threads", args.threads, "Worker threads or 'auto'")->capture_default_str();
  sweep->add_option("--kappa-mhz", args.kappa_mhz, "kappa/2pi in MHz (metadata only)")->capture_default_str();
  std::string config_path;
  sweep->add_option("--config", config_path, "Flat key=value file mirroring the flags (flags override it)");

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) apply_config_file(*sweep, config_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const kerr::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run_sweep_command(args);
}

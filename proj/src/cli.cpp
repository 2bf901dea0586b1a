// Copyright 2026 The Skyport Authors
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

#include "skyport/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "skyport/geojson.hpp"
#include "skyport/ingest.hpp"
#include "skyport/json_io.hpp"
#include "skyport/mps_writer.hpp"
#include "skyport/queueing.hpp"

namespace skyport::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read error: " + path);
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::error_code ec;
  const fs::file_status st = fs::symlink_status(target, ec);
  // Devices, pipes and symlinks must not be replaced by a rename.
  if (!ec && fs::exists(st) && !fs::is_regular_file(st)) {
    std::ofstream out(target, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
    if (!out) throw std::runtime_error("write error: " + path);
    return;
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write error: " + tmp.string());
  }
  fs::rename(tmp, target);
}

ProblemInstance load_instance(const std::string& path) {
  try {
    return instance_from_json(read_file(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

HubSolution load_solution(const std::string& path) {
  try {
    return solution_from_json(read_file(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

AllocationMode parse_mode(const std::string& mode) {
  if (mode == "per-pair") return AllocationMode::kPerPair;
  if (mode == "single-origin") return AllocationMode::kSinglePerOrigin;
  throw std::invalid_argument("unknown allocation mode: " + mode);
}

SolveMethod parse_method(const std::string& method) {
  if (method == "bf") return SolveMethod::kBruteForce;
  if (method == "bb") return SolveMethod::kBranchAndBound;
  if (method == "ls") return SolveMethod::kLocalSearch;
  throw std::invalid_argument("unknown solver method: " + method);
}

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  std::string trips_path;
  std::string zones_path;
  std::string out_path = "instance.json";
  std::string stats_path = "ingest_stats.json";
  IngestConfig config;
  long long keep_zones = -1;
  double keep_quantile = -1.0;
};

int cmd_ingest(const IngestArgs& args) {
  std::ifstream trips_file(args.trips_path);
  if (!trips_file) {
    throw std::invalid_argument("trips file not found: " + args.trips_path);
  }
  std::ifstream zones_file(args.zones_path);
  if (!zones_file) {
    throw std::invalid_argument("zones file not found: " + args.zones_path);
  }

  IngestConfig config = args.config;
  if (args.keep_zones >= 0) {
    config.prune_keep = static_cast<std::size_t>(args.keep_zones);
  }
  if (args.keep_quantile >= 0.0) config.prune_quantile = args.keep_quantile;

  ParseStats parse_stats;
  const std::vector<TripRecord> trips = parse_trips(trips_file, parse_stats);
  const std::vector<Zone> zones = parse_zones(zones_file);

  IngestStats stats;
  const ProblemInstance instance =
      build_instance(trips, zones, config, &stats);
  stats.rows = parse_stats.rows;
  stats.malformed = parse_stats.malformed;
  stats.negative_duration = parse_stats.negative_duration;
  ensure_valid(instance);

  write_file_atomic(args.out_path, to_json(instance));

  json stats_json{{"rows", stats.rows},
                  {"malformed", stats.malformed},
                  {"negative_duration", stats.negative_duration},
                  {"duration_filtered", stats.duration_filtered},
                  {"trips_retained", stats.trips_retained},
                  {"distinct_days", stats.distinct_days},
                  {"demand_total", stats.demand_total},
                  {"zones_total", stats.zones_total},
                  {"airport_count", stats.airport_count},
                  {"origins_before_prune", stats.origins_before_prune},
                  {"origins_retained", stats.origins_retained},
                  {"prune_clamped", stats.prune_clamped}};
  write_file_atomic(args.stats_path, stats_json.dump(2));

  fmt::print("ingested {} trips over {} days: {} origins, {} airports -> {}\n",
             stats.trips_retained, stats.distinct_days,
             stats.origins_retained, stats.airport_count, args.out_path);
  return 0;
}

// ---- solve ----------------------------------------------------------------

struct ScenarioArgs {
  double alpha = 0.0;
  double beta = 1.0;
  int p = 0;
  std::string mode = "per-pair";
};

struct SolveArgs {
  std::string instance_path;
  ScenarioArgs scenario;
  std::string method = "bb";
  SolverOptions options;
  std::string out_path = "solution.json";
  bool no_meta = false;
};

Scenario make_scenario(const ScenarioArgs& args) {
  Scenario s;
  s.alpha = args.alpha;
  s.beta = args.beta;
  s.p = args.p;
  s.allocation_mode = parse_mode(args.mode);
  return s;
}

void print_table_header() {
  fmt::print("{:>4}  {:>14}  {:>8}  {:>10}  {:>8}  {:>7}  {}\n", "p",
             "objective (M)", "% decr", "iters", "time (s)", "direct",
             "skyport zone ids");
}

void print_table_row(const HubSolution& solution, double baseline,
                     bool show_time) {
  const double millions = solution.objective / 1e6;
  std::string decrease = "-";
  std::string hubs = "-";
  if (!solution.hubs.empty()) {
    if (baseline > 0.0) {
      decrease = fmt::format(
          "{:.2f}", (baseline - solution.objective) / baseline * 100.0);
    }
    hubs = join_ids(solution.hubs);
  }
  const std::string time_cell =
      show_time ? fmt::format("{:.2f}", solution.meta.wall_time_seconds) : "-";
  fmt::print("{:>4}  {:>14.2f}  {:>8}  {:>10}  {:>8}  {:>7}  {}\n",
             solution.hubs.size(), millions, decrease,
             solution.meta.iterations, time_cell, solution.direct_count,
             hubs);
}

int cmd_solve(const SolveArgs& args) {
  const ProblemInstance instance = load_instance(args.instance_path);
  ensure_valid(instance);
  Scenario scenario = make_scenario(args.scenario);
  ensure_valid(scenario, instance.origin_count());

  SolverOptions options = args.options;
  options.method = parse_method(args.method);
  const HubSolution solution = solve(instance, scenario, options);

  Scenario baseline_scenario = scenario;
  baseline_scenario.p = 0;
  const double baseline =
      evaluate_hub_set({}, baseline_scenario, instance).objective;

  print_table_header();
  print_table_row(solution, baseline, /*show_time=*/true);
  write_file_atomic(args.out_path,
                    to_json(solution, 2, /*include_meta=*/!args.no_meta));
  return 0;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string instance_path;
  std::string out_dir = "sweep";
  std::vector<int> p_values;
  std::vector<std::string> scenario_specs;  // "alpha:beta"
  std::string mode = "per-pair";
  std::string method = "bb";
  SolverOptions options;
  int jobs = 1;
  bool no_meta = false;
};

struct SweepCell {
  bool ok = false;
  std::string error;
  HubSolution solution;
};

std::string trim_number(double v) { return fmt::format("{:g}", v); }

int cmd_sweep(const SweepArgs& args) {
  const ProblemInstance instance = load_instance(args.instance_path);
  ensure_valid(instance);

  SweepSpec spec = SweepSpec::defaults();
  spec.mode = parse_mode(args.mode);
  spec.options = args.options;
  spec.options.method = parse_method(args.method);
  spec.jobs = std::max(1, args.jobs);
  if (!args.p_values.empty()) spec.p_values = args.p_values;
  std::sort(spec.p_values.begin(), spec.p_values.end());
  spec.p_values.erase(
      std::unique(spec.p_values.begin(), spec.p_values.end()),
      spec.p_values.end());
  if (!args.scenario_specs.empty()) {
    spec.scenarios.clear();
    for (const std::string& s : args.scenario_specs) {
      const std::size_t colon = s.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("scenario must be alpha:beta, got " + s);
      }
      spec.scenarios.emplace_back(std::stod(s.substr(0, colon)),
                                  std::stod(s.substr(colon + 1)));
    }
  }
  if (spec.p_values.empty() || spec.scenarios.empty()) {
    throw std::invalid_argument("sweep needs non-empty p values and scenarios");
  }

  const std::size_t n_cells = spec.scenarios.size() * spec.p_values.size();
  std::vector<SweepCell> cells(n_cells);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t cell = next.fetch_add(1);
      if (cell >= n_cells) return;
      const auto [alpha, beta] = spec.scenarios[cell / spec.p_values.size()];
      Scenario scenario;
      scenario.alpha = alpha;
      scenario.beta = beta;
      scenario.p = spec.p_values[cell % spec.p_values.size()];
      scenario.allocation_mode = spec.mode;
      try {
        cells[cell].solution = solve(instance, scenario, spec.options);
        cells[cell].ok = true;
      } catch (const std::exception& e) {
        cells[cell].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), n_cells);
  for (std::size_t t = 1; t < n_workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  fs::create_directories(args.out_dir);
  std::string normalized = "alpha,beta,p,normalized_objective\n";
  std::string directs = "alpha,beta,p,direct_connections\n";

  for (std::size_t s = 0; s < spec.scenarios.size(); ++s) {
    const auto [alpha, beta] = spec.scenarios[s];
    Scenario base;
    base.alpha = alpha;
    base.beta = beta;
    base.p = 0;
    base.allocation_mode = spec.mode;
    const double baseline = evaluate_hub_set({}, base, instance).objective;

    std::string csv =
        "p,objective,objective_millions,pct_decrease_vs_p0,iterations,"
        "time_seconds,direct_connections,hubs,proven\n";
    for (std::size_t pi = 0; pi < spec.p_values.size(); ++pi) {
      const int p = spec.p_values[pi];
      const SweepCell& cell = cells[s * spec.p_values.size() + pi];
      if (!cell.ok) {
        csv += fmt::format("{},error,,,,,,\"{}\",false\n", p, cell.error);
        continue;
      }
      const HubSolution& sol = cell.solution;
      const std::string decrease =
          p == 0 ? "-"
                 : fmt::format("{:.2f}",
                               (baseline - sol.objective) / baseline * 100.0);
      const std::string time_cell =
          args.no_meta ? "-"
                       : fmt::format("{:.3f}", sol.meta.wall_time_seconds);
      csv += fmt::format("{},{:.6f},{:.2f},{},{},{},{},{},{}\n", p,
                         sol.objective, sol.objective / 1e6, decrease,
                         sol.meta.iterations, time_cell, sol.direct_count,
                         p == 0 ? "-" : join_ids(sol.hubs),
                         sol.meta.proven ? "true" : "false");
      normalized += fmt::format("{},{},{},{:.9f}\n", trim_number(alpha),
                                trim_number(beta), p,
                                sol.objective / baseline);
      directs += fmt::format("{},{},{},{}\n", trim_number(alpha),
                             trim_number(beta), p, sol.direct_count);
    }
    const std::string name = fmt::format("sweep_a{}_b{}.csv",
                                         trim_number(alpha),
                                         trim_number(beta));
    write_file_atomic((fs::path(args.out_dir) / name).string(), csv);
    fmt::print("wrote {}\n", (fs::path(args.out_dir) / name).string());
  }
  write_file_atomic(
      (fs::path(args.out_dir) / "normalized_objective.csv").string(),
      normalized);
  write_file_atomic(
      (fs::path(args.out_dir) / "direct_connections.csv").string(), directs);
  return 0;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string instance_path;
  std::string solution_path;
  std::string trips_path;
  std::string profiles_path = "profiles.csv";
  std::string report_path = "penetration.json";
  double alpha = 0.0;
  double beta = 1.0;
  int servers = 12;
  double mu = 0.0;  // 0 = derive from max aerial time + loading
  double wait_minutes = 5.0;
  double load_unload = 2.0;
  double min_trip = 1.0;
  double max_trip = 300.0;
  bool no_beta_access = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const ProblemInstance instance = load_instance(args.instance_path);
  ensure_valid(instance);
  const HubSolution solution = load_solution(args.solution_path);
  for (int hub : solution.hubs) {
    if (!instance.origin_index(hub)) {
      throw std::invalid_argument("solution hub " + std::to_string(hub) +
                                  " is not an instance origin");
    }
  }

  std::ifstream trips_file(args.trips_path);
  if (!trips_file) {
    throw std::invalid_argument("trips file not found: " + args.trips_path);
  }
  ParseStats parse_stats;
  const std::vector<TripRecord> raw = parse_trips(trips_file, parse_stats);
  IngestConfig config;
  config.min_trip_minutes = args.min_trip;
  config.max_trip_minutes = args.max_trip;
  const std::vector<TripRecord> trips = filter_by_duration(raw, config);

  Scenario scenario;
  scenario.alpha = args.alpha;
  scenario.beta = args.beta;
  scenario.p = static_cast<int>(solution.hubs.size());

  ProfileStats profile_stats;
  const std::vector<DemandProfile> profiles =
      hub_arrival_profiles(solution, trips, scenario, instance,
                           !args.no_beta_access, &profile_stats);

  std::string csv = "hub";
  for (int h = 0; h < 24; ++h) csv += fmt::format(",hour_{}", h);
  csv += ",peak\n";
  for (const DemandProfile& p : profiles) {
    csv += std::to_string(p.hub);
    for (int h = 0; h < 24; ++h) csv += fmt::format(",{:.10g}", p.hourly[h]);
    csv += fmt::format(",{:.10g}\n", p.peak);
  }
  write_file_atomic(args.profiles_path, csv);

  QueueSpec queue;
  queue.servers = args.servers;
  queue.wait_target = args.wait_minutes / 60.0;
  if (args.mu > 0.0) {
    queue.service_rate = args.mu;
  } else {
    double max_aerial = 0.0;
    for (std::size_t k = 0; k < instance.origin_count(); ++k) {
      for (std::size_t j = 0; j < instance.airport_count(); ++j) {
        max_aerial = std::max(max_aerial, instance.aerial(k, j));
      }
    }
    queue.service_rate = service_rate_from_times(max_aerial, args.load_unload);
  }

  const ToleranceResult tol = lambda_tolerable(queue);
  const double peak_max = profiles.empty() ? 0.0 : lambda_max(profiles);

  json report{{"servers", queue.servers},
              {"service_rate", queue.service_rate},
              {"wait_target_minutes", args.wait_minutes},
              {"lambda_tol", tol.lambda},
              {"lambda_tol_floor", tol.lambda_floor},
              {"lambda_max", peak_max},
              {"trips_bucketed", profile_stats.trips_bucketed},
              {"skipped_pruned_zone", profile_stats.skipped_pruned_zone},
              {"skipped_unrouted", profile_stats.skipped_unrouted}};
  if (peak_max > 0.0) {
    const PenetrationReport pen =
        market_penetration(static_cast<double>(tol.lambda_floor), peak_max);
    report["penetration"] = pen.penetration;
    report["penetration_percent"] =
        std::round(pen.penetration * 10000.0) / 100.0;
  } else {
    report["penetration"] = nullptr;
    report["full_coverage"] = true;
  }
  json peaks = json::object();
  for (const DemandProfile& p : profiles) {
    peaks[std::to_string(p.hub)] = p.peak;
  }
  report["per_hub_peak"] = std::move(peaks);
  write_file_atomic(args.report_path, report.dump(2));

  fmt::print("lambda_max={:.6g} lambda_tol={:.6g} (floor {})\n", peak_max,
             tol.lambda, tol.lambda_floor);
  return 0;
}

// ---- export ----------------------------------------------------------------

struct ExportArgs {
  std::string instance_path;
  std::string format;
  std::string out_path;
  std::string solution_path;
  ScenarioArgs scenario;
};

int cmd_export(const ExportArgs& args) {
  const ProblemInstance instance = load_instance(args.instance_path);
  ensure_valid(instance);
  if (args.format == "mps") {
    Scenario scenario = make_scenario(args.scenario);
    ensure_valid(scenario, instance.origin_count());
    write_file_atomic(args.out_path, write_mps(instance, scenario));
  } else if (args.format == "geojson") {
    if (args.solution_path.empty()) {
      throw std::invalid_argument("geojson export requires --solution");
    }
    const HubSolution solution = load_solution(args.solution_path);
    write_file_atomic(args.out_path, solution_geojson(instance, solution));
  } else {
    throw std::invalid_argument("unknown export format: " + args.format);
  }
  fmt::print("wrote {}\n", args.out_path);
  return 0;
}

}  // namespace

SweepSpec SweepSpec::defaults() {
  SweepSpec spec;
  spec.p_values = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  spec.scenarios = {{0.0, 1.0},  {10.0, 1.0}, {10.0, 1.1}, {15.0, 1.0},
                    {15.0, 1.1}, {20.0, 1.0}, {20.0, 1.1}};
  return spec;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"air-taxi skyport location toolkit"};
  app.set_config("--config", "", "key=value config file; flags override");
  app.require_subcommand(1);

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "build a problem instance from trips and zones CSVs");
  ingest->add_option("--trips", ingest_args.trips_path, "trips CSV")
      ->required();
  ingest->add_option("--zones", ingest_args.zones_path, "zones CSV")
      ->required();
  ingest->add_option("--out", ingest_args.out_path, "instance JSON path");
  ingest->add_option("--stats", ingest_args.stats_path, "stats JSON path");
  ingest->add_option("--airspeed", ingest_args.config.airspeed_mph,
                     "air taxi speed, mph");
  ingest->add_option("--min-trip", ingest_args.config.min_trip_minutes,
                     "min trip duration, minutes");
  ingest->add_option("--max-trip", ingest_args.config.max_trip_minutes,
                     "max trip duration, minutes");
  ingest->add_option("--keep-zones", ingest_args.keep_zones,
                     "retain the top N zones by airport demand");
  ingest->add_option("--keep-quantile", ingest_args.keep_quantile,
                     "retain the top fraction of zones by airport demand");

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "select optimal skyport locations");
  solve_cmd->add_option("--instance", solve_args.instance_path,
                        "instance JSON")
      ->required();
  solve_cmd->add_option("--alpha", solve_args.scenario.alpha,
                        "transfer time, minutes");
  solve_cmd->add_option("--beta", solve_args.scenario.beta,
                        "congestion factor (>= 1)");
  solve_cmd->add_option("--p", solve_args.scenario.p, "number of skyports");
  solve_cmd->add_option("--mode", solve_args.scenario.mode,
                        "per-pair | single-origin");
  solve_cmd->add_option("--method", solve_args.method, "bf | bb | ls");
  solve_cmd->add_option("--seed", solve_args.options.seed, "heuristic seed");
  solve_cmd->add_option("--restarts", solve_args.options.restarts,
                        "heuristic restarts");
  solve_cmd->add_option("--time-limit", solve_args.options.time_limit_seconds,
                        "seconds");
  solve_cmd->add_option("--gap", solve_args.options.gap_tolerance,
                        "relative gap tolerance");
  solve_cmd->add_option("--out", solve_args.out_path, "solution JSON path");
  solve_cmd->add_flag("--no-meta", solve_args.no_meta,
                      "omit volatile metadata from outputs");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "solve a grid of (alpha, beta) x p scenarios");
  sweep_cmd->add_option("--instance", sweep_args.instance_path,
                        "instance JSON")
      ->required();
  sweep_cmd->add_option("--out-dir", sweep_args.out_dir, "output directory");
  sweep_cmd->add_option("--p-values", sweep_args.p_values,
                        "hub counts (default 0..10)");
  sweep_cmd->add_option("--scenarios", sweep_args.scenario_specs,
                        "alpha:beta pairs (default: the seven standard)");
  sweep_cmd->add_option("--mode", sweep_args.mode, "per-pair | single-origin");
  sweep_cmd->add_option("--method", sweep_args.method, "bf | bb | ls");
  sweep_cmd->add_option("--seed", sweep_args.options.seed, "heuristic seed");
  sweep_cmd->add_option("--restarts", sweep_args.options.restarts,
                        "heuristic restarts");
  sweep_cmd->add_option("--time-limit",
                        sweep_args.options.time_limit_seconds, "seconds");
  sweep_cmd->add_option("--gap", sweep_args.options.gap_tolerance,
                        "relative gap tolerance");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "worker threads");
  sweep_cmd->add_flag("--no-meta", sweep_args.no_meta,
                      "omit volatile metadata from outputs");

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "demand profiles and M/M/c service analysis for a solution");
  analyze_cmd->add_option("--instance", analyze_args.instance_path,
                          "instance JSON")
      ->required();
  analyze_cmd->add_option("--solution", analyze_args.solution_path,
                          "solution JSON")
      ->required();
  analyze_cmd->add_option("--trips", analyze_args.trips_path,
                          "trips CSV (timestamps required)")
      ->required();
  analyze_cmd->add_option("--profiles", analyze_args.profiles_path,
                          "profiles CSV path");
  analyze_cmd->add_option("--report", analyze_args.report_path,
                          "penetration JSON path");
  analyze_cmd->add_option("--alpha", analyze_args.alpha,
                          "transfer time used when solving");
  analyze_cmd->add_option("--beta", analyze_args.beta,
                          "congestion factor used when solving");
  analyze_cmd->add_option("--servers", analyze_args.servers,
                          "air taxis per skyport (c)");
  analyze_cmd->add_option("--mu", analyze_args.mu,
                          "service rate, vehicles/hour (default: derived)");
  analyze_cmd->add_option("--wait-minutes", analyze_args.wait_minutes,
                          "tolerable queue wait");
  analyze_cmd->add_option("--load-unload", analyze_args.load_unload,
                          "loading minutes per end");
  analyze_cmd->add_option("--min-trip", analyze_args.min_trip,
                          "min trip duration, minutes");
  analyze_cmd->add_option("--max-trip", analyze_args.max_trip,
                          "max trip duration, minutes");
  analyze_cmd->add_flag("--no-beta-access", analyze_args.no_beta_access,
                        "use unscaled ground time for hub access");

  ExportArgs export_args;
  CLI::App* export_cmd =
      app.add_subcommand("export", "write MPS or GeoJSON artifacts");
  export_cmd->add_option("--instance", export_args.instance_path,
                         "instance JSON")
      ->required();
  export_cmd->add_option("--format", export_args.format, "mps | geojson")
      ->required();
  export_cmd->add_option("--out", export_args.out_path, "output path")
      ->required();
  export_cmd->add_option("--solution", export_args.solution_path,
                         "solution JSON (geojson only)");
  export_cmd->add_option("--alpha", export_args.scenario.alpha,
                         "transfer time (mps only)");
  export_cmd->add_option("--beta", export_args.scenario.beta,
                         "congestion factor (mps only)");
  export_cmd->add_option("--p", export_args.scenario.p,
                         "number of skyports (mps only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(ingest_args);
    if (solve_cmd->parsed()) return cmd_solve(solve_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_args);
    if (export_cmd->parsed()) return cmd_export(export_args);
  } catch (const UnroutableError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  } catch (const FormatError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 2;
}

}  // namespace skyport::cli

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

// Acceptance suite. Each criterion prints exactly one PASS/FAIL line;
// dataset-conditional checks print SKIP when the data is not mounted.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skyport/allocation.hpp"
#include "skyport/ingest.hpp"
#include "skyport/mps_writer.hpp"
#include "skyport/queueing.hpp"
#include "skyport/solver.hpp"
#include "test_support.hpp"

using namespace skyport;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool relative_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct SuiteCase {
  ProblemInstance instance;
  Scenario scenario;
};

// The oracle instance suite: >= 100 random instances with N <= 15,
// |J| <= 3, p <= 4, uniform costs, integer demands <= 20.
std::vector<SuiteCase> oracle_suite() {
  std::mt19937_64 rng(20260810);
  std::vector<SuiteCase> suite;
  for (int i = 0; i < 100; ++i) {
    SuiteCase c;
    const std::size_t n = 4 + rng() % 12;  // 4..15
    c.instance = test::random_instance(rng, n, 1 + rng() % 3);
    c.scenario.alpha = static_cast<double>(rng() % 21);
    c.scenario.beta = 1.0 + 0.1 * static_cast<double>(rng() % 2);
    c.scenario.p = static_cast<int>(rng() % std::min<std::size_t>(n + 1, 5));
    suite.push_back(std::move(c));
  }
  return suite;
}

// ---- criterion 1: branch and bound == brute force -------------------------

bool oracle_equivalence(std::string& detail) {
  const auto start = Clock::now();
  const auto suite = oracle_suite();
  int checked = 0;
  for (const SuiteCase& c : suite) {
    const HubSolution bf = solve_brute_force(c.instance, c.scenario);
    const HubSolution bb = solve_branch_and_bound(c.instance, c.scenario);
    if (!relative_equal(bf.objective, bb.objective, 1e-9)) {
      detail = fmt::format("objective mismatch on instance {}", checked);
      return false;
    }
    if (bf.hubs != bb.hubs) {
      detail = fmt::format("hub set mismatch on instance {}", checked);
      return false;
    }
    ++checked;
  }
  const double elapsed = seconds_since(start);
  detail = fmt::format("{} instances agree, {:.1f}s", checked, elapsed);
  return elapsed < 60.0;
}

// ---- criterion 2: per-pair decomposition ----------------------------------

bool decomposition_exact(std::string& detail) {
  std::mt19937_64 rng(424242);
  for (int draw = 0; draw < 1000; ++draw) {
    const std::size_t n = 2 + rng() % 11;
    const ProblemInstance ins = test::random_instance(rng, n, 1 + rng() % 3);
    Scenario sc;
    sc.alpha = static_cast<double>(rng() % 25);
    sc.beta = 1.0 + 0.05 * static_cast<double>(rng() % 5);
    std::vector<std::size_t> hubs;
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 2 == 0) hubs.push_back(k);
    }
    const double expected = test::oracle_objective(ins, sc, hubs);
    const double got = evaluate_hub_set(hubs, sc, ins).objective;
    if (got != expected) {
      detail = fmt::format("draw {}: {} != {}", draw, got, expected);
      return false;
    }
  }
  detail = "1000 random draws, bit-exact";
  return true;
}

// ---- criterion 3: monotonicity and scaling ---------------------------------

bool monotonicity_suites(std::string& detail) {
  const auto suite = oracle_suite();

  // Optimal objective non-increasing in p.
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const SuiteCase& c = suite[idx];
    double prev = std::numeric_limits<double>::infinity();
    Scenario sc = c.scenario;
    for (std::size_t p = 0; p <= c.instance.origin_count(); ++p) {
      sc.p = static_cast<int>(p);
      const double obj = solve_brute_force(c.instance, sc).objective;
      if (obj > prev + 1e-9) {
        detail = fmt::format("instance {}: objective rose at p={}", idx, p);
        return false;
      }
      prev = obj;
    }
  }

  // Objective and direct count non-decreasing in alpha at fixed hubs.
  std::mt19937_64 rng(777);
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const SuiteCase& c = suite[idx];
    std::vector<std::size_t> hubs;
    for (std::size_t k = 0; k < c.instance.origin_count(); ++k) {
      if (rng() % 3 == 0) hubs.push_back(k);
    }
    double prev_obj = -1.0;
    int prev_direct = -1;
    for (double alpha : {0.0, 5.0, 10.0, 15.0, 20.0, 60.0}) {
      Scenario sc = c.scenario;
      sc.alpha = alpha;
      const Evaluation eval = evaluate_hub_set(hubs, sc, c.instance);
      if (eval.objective < prev_obj - 1e-9 || eval.direct_count < prev_direct) {
        detail = fmt::format("instance {}: alpha monotonicity broken", idx);
        return false;
      }
      prev_obj = eval.objective;
      prev_direct = eval.direct_count;
    }
  }

  // Linear scaling of costs and alpha, routing unchanged.
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const SuiteCase& c = suite[idx];
    std::vector<std::size_t> hubs;
    for (std::size_t k = 0; k < c.instance.origin_count(); k += 2) {
      hubs.push_back(k);
    }
    const Evaluation ref = evaluate_hub_set(hubs, c.scenario, c.instance);
    for (double gamma : {0.5, 2.0, 10.0}) {
      ProblemInstance scaled = c.instance;
      const std::size_t n = scaled.origin_count();
      const std::size_t jc = scaled.airport_count();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t col = 0; col < n + jc; ++col) {
          if (scaled.ground_cost.has(i, col)) {
            scaled.ground_cost(i, col) = gamma * c.instance.ground_cost(i, col);
          }
        }
        for (std::size_t j = 0; j < jc; ++j) {
          scaled.aerial_cost(i, j) = gamma * c.instance.aerial_cost(i, j);
        }
      }
      Scenario sc = c.scenario;
      sc.alpha = gamma * c.scenario.alpha;
      const Evaluation got = evaluate_hub_set(hubs, sc, scaled);
      if (!relative_equal(got.objective, gamma * ref.objective, 1e-9)) {
        detail = fmt::format("instance {}: scaling by {} broken", idx, gamma);
        return false;
      }
      for (std::size_t q = 0; q < ref.routing.size(); ++q) {
        if (got.routing[q].kind != ref.routing[q].kind ||
            got.routing[q].hub != ref.routing[q].hub) {
          detail = fmt::format("instance {}: routing changed under scaling",
                               idx);
          return false;
        }
      }
    }
  }

  detail = "p-monotone, alpha-monotone, gamma-linear on the oracle suite";
  return true;
}

// ---- criterion 4: ILP variable counts --------------------------------------

struct MpsCounts {
  std::size_t binaries = 0;
  std::size_t continuous = 0;
};

MpsCounts count_mps_variables(const std::string& text) {
  std::istringstream in(text);
  std::string line, section;
  bool integer_block = false;
  std::set<std::string> binaries, continuous;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != ' ') {
      std::istringstream ls(line);
      ls >> section;
      continue;
    }
    if (section != "COLUMNS") continue;
    std::istringstream ls(line);
    std::string f1, f2, f3;
    ls >> f1 >> f2 >> f3;
    if (f2 == "'MARKER'") {
      if (f3 == "'INTORG'") integer_block = true;
      if (f3 == "'INTEND'") integer_block = false;
      continue;
    }
    (integer_block ? binaries : continuous).insert(f1);
  }
  return {binaries.size(), continuous.size()};
}

bool ilp_variable_count(std::string& detail) {
  std::mt19937_64 rng(31337);
  {
    const ProblemInstance ins = test::random_instance(rng, 144, 3);
    Scenario sc;
    sc.p = 6;
    const MpsCounts counts = count_mps_variables(write_mps(ins, sc));
    if (counts.binaries != 62784 || counts.continuous != 0) {
      detail = fmt::format("N=144: {} binaries, {} continuous",
                           counts.binaries, counts.continuous);
      return false;
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t jc = 1 + rng() % 3;
    const ProblemInstance ins = test::random_instance(rng, n, jc);
    Scenario sc;
    sc.p = static_cast<int>(rng() % (n + 1));
    const MpsCounts counts = count_mps_variables(write_mps(ins, sc));
    const std::size_t expected = n * n * jc + n + n * jc;
    if (counts.binaries != expected || counts.continuous != 0) {
      detail = fmt::format("N={} J={}: got {} binaries, want {}", n, jc,
                           counts.binaries, expected);
      return false;
    }
  }
  detail = "62784 binaries at N=144 J=3; formula holds on 20 random sizes";
  return true;
}

// ---- criterion 5: queueing reproduction ------------------------------------

bool queueing_reproduction(std::string& detail) {
  const auto start = Clock::now();
  QueueSpec spec;
  spec.servers = 12;
  spec.service_rate = 2.5;
  spec.wait_target = 5.0 / 60.0;

  const ToleranceResult tol = lambda_tolerable(spec);
  if (tol.lambda_floor != 24) {
    detail = fmt::format("lambda_tol floor = {}", tol.lambda_floor);
    return false;
  }
  if (!(erlang_metrics(24.0, spec).wq <= 5.0 / 60.0) ||
      !(erlang_metrics(25.0, spec).wq > 5.0 / 60.0)) {
    detail = "wait-time bracket around 24/25 veh/hour failed";
    return false;
  }

  QueueSpec single;
  single.servers = 1;
  for (int li = 1; li <= 10; ++li) {
    for (int mi = 1; mi <= 10; ++mi) {
      const double mu = 0.4 * mi + 0.8;
      const double lambda = 0.095 * li * mu;
      single.service_rate = mu;
      const ErlangMetrics m = erlang_metrics(lambda, single);
      const double closed = lambda / (mu * (mu - lambda));
      if (!relative_equal(m.wq, closed, 1e-9)) {
        detail = fmt::format("M/M/1 mismatch at lambda={} mu={}", lambda, mu);
        return false;
      }
    }
  }
  const double elapsed = seconds_since(start);
  detail = fmt::format(
      "floor(lambda_tol)=24, Wq(24)<=5min<Wq(25), M/M/1 grid ok, {:.3f}s",
      elapsed);
  return elapsed < 1.0;
}

// ---- criterion 6: penetration table arithmetic -----------------------------

bool penetration_table(std::string& detail) {
  const auto start = Clock::now();
  // lambda_p^max rows p=1..10 for (alpha, beta) in
  // (10,1), (10,1.1), (15,1), (15,1.1), (20,1), (20,1.1).
  const double lambda_max_table[10][6] = {
      {910, 936, 739, 793, 557, 619}, {585, 588, 456, 527, 396, 402},
      {513, 510, 354, 473, 347, 347}, {489, 489, 360, 365, 285, 346},
      {475, 476, 348, 356, 285, 285}, {272, 281, 269, 281, 243, 262},
      {247, 256, 225, 234, 243, 220}, {247, 256, 225, 234, 198, 262},
      {225, 220, 192, 192, 198, 208}, {192, 220, 192, 192, 142, 208}};
  const double penetration_table[10][6] = {
      {2.64, 2.56, 3.25, 3.03, 4.31, 3.88},
      {4.10, 4.08, 5.26, 4.55, 6.06, 5.97},
      {4.68, 4.71, 6.78, 5.07, 6.92, 6.92},
      {4.91, 4.91, 6.67, 6.58, 8.42, 6.94},
      {5.05, 5.04, 6.90, 6.74, 8.42, 8.42},
      {8.82, 8.54, 8.92, 8.54, 9.88, 9.16},
      {9.72, 9.38, 10.67, 10.26, 9.88, 10.91},
      {9.72, 9.38, 10.67, 10.26, 12.12, 9.16},
      {10.67, 10.91, 12.50, 12.50, 12.12, 11.54},
      {12.50, 10.91, 12.50, 12.50, 16.90, 11.54}};

  for (int row = 0; row < 10; ++row) {
    for (int col = 0; col < 6; ++col) {
      const PenetrationReport report =
          market_penetration(24.0, lambda_max_table[row][col]);
      const double percent = report.penetration * 100.0;
      if (std::abs(percent - penetration_table[row][col]) > 0.005 + 1e-12) {
        detail = fmt::format("cell p={} col={}: {:.4f} vs {:.2f}", row + 1,
                             col, percent, penetration_table[row][col]);
        return false;
      }
    }
  }
  const double elapsed = seconds_since(start);
  detail = fmt::format("all 60 cells within 0.005pp, {:.3f}s", elapsed);
  return elapsed < 1.0;
}

// ---- criterion 7: heuristic quality -----------------------------------------

bool heuristic_quality(std::string& detail) {
  const auto suite = oracle_suite();
  int matched = 0;
  int total = 0;
  for (const SuiteCase& c : suite) {
    SolverOptions options;
    options.restarts = 10;
    options.seed = 99;
    const HubSolution ls = solve_local_search(c.instance, c.scenario, options);
    const HubSolution bf = solve_brute_force(c.instance, c.scenario);
    if (ls.objective < bf.objective - 1e-9) {
      detail = fmt::format("heuristic beat the oracle on instance {}", total);
      return false;
    }
    if (relative_equal(ls.objective, bf.objective, 1e-9)) ++matched;
    ++total;
  }
  detail = fmt::format("optimal on {}/{} instances ({}% required: 90%)",
                       matched, total, matched * 100 / total);
  return matched * 10 >= total * 9;
}

// ---- criterion 8: NYC dataset reproduction (dataset-conditional) -----------

bool nyc_reproduction(std::string& detail, bool& skipped) {
  const char* trips_env = std::getenv("SKYPORT_NYC_TRIPS");
  const char* zones_env = std::getenv("SKYPORT_NYC_ZONES");
  if (trips_env == nullptr || zones_env == nullptr) {
    skipped = true;
    detail =
        "set SKYPORT_NYC_TRIPS and SKYPORT_NYC_ZONES to run the NYC check";
    return true;
  }

  std::ifstream trips_file(trips_env);
  std::ifstream zones_file(zones_env);
  if (!trips_file || !zones_file) {
    detail = "NYC data paths are set but unreadable";
    return false;
  }
  ParseStats parse_stats;
  const std::vector<TripRecord> trips = parse_trips(trips_file, parse_stats);
  const std::vector<Zone> zones = parse_zones(zones_file);
  IngestConfig config;
  config.prune_keep = 144;
  const ProblemInstance instance = build_instance(trips, zones, config);

  const double reference_millions[11] = {19.53, 11.62, 10.36, 9.42, 8.82, 8.31,
                                         8.03,  7.78,  7.53,  7.29, 7.07};
  const std::vector<std::vector<int>> hubs_table = {
      {},
      {233},
      {80, 233},
      {80, 107, 142},
      {49, 233, 238, 249},
      {80, 181, 233, 238, 249},
      {80, 161, 181, 233, 238, 249},
      {61, 87, 90, 112, 161, 233, 238},
      {7, 61, 80, 87, 90, 161, 233, 238},
      {7, 61, 80, 87, 90, 161, 181, 233, 238},
      {7, 61, 80, 87, 90, 161, 181, 233, 238, 263}};

  for (int p = 0; p <= 10; ++p) {
    Scenario sc;
    sc.p = p;
    SolverOptions options;
    options.time_limit_seconds = 600.0;
    const HubSolution solution = solve_branch_and_bound(instance, sc, options);
    const double expected = reference_millions[p] * 1e6;
    if (std::abs(solution.objective - expected) > 0.02 * expected) {
      detail = fmt::format("p={}: objective {:.2f}M vs {:.2f}M", p,
                           solution.objective / 1e6, reference_millions[p]);
      return false;
    }
    std::set<int> got(solution.hubs.begin(), solution.hubs.end());
    int overlap = 0;
    for (int hub : hubs_table[p]) overlap += got.count(hub);
    if (overlap + 1 < p) {
      detail = fmt::format("p={}: hub overlap {} < p-1", p, overlap);
      return false;
    }
  }
  detail = "base-case objectives within 2%, hub overlap >= p-1";
  return true;
}

struct Criterion {
  const char* name;
  bool (*fn)(std::string&);
};

}  // namespace

int main() {
  int failures = 0;
  const Criterion criteria[] = {
      {"oracle-equivalence", oracle_equivalence},
      {"decomposition-exact", decomposition_exact},
      {"monotonicity-suites", monotonicity_suites},
      {"ilp-variable-count", ilp_variable_count},
      {"queueing-reproduction", queueing_reproduction},
      {"penetration-table", penetration_table},
      {"heuristic-quality", heuristic_quality},
  };
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.fn(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    fmt::print("[{}] {} — {}\n", ok ? "PASS" : "FAIL", criterion.name, detail);
    if (!ok) ++failures;
  }

  {
    std::string detail;
    bool skipped = false;
    bool ok = false;
    try {
      ok = nyc_reproduction(detail, skipped);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    fmt::print("[{}] nyc-reproduction — {}\n",
               skipped ? "SKIP" : (ok ? "PASS" : "FAIL"), detail);
    if (!ok && !skipped) ++failures;
  }

  return failures == 0 ? 0 : 1;
}

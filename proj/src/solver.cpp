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

#include "skyport/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace skyport {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> sorted_zone_ids(std::span<const std::size_t> set,
                                 const ProblemInstance& instance) {
  std::vector<int> ids;
  ids.reserve(set.size());
  for (std::size_t k : set) ids.push_back(instance.origins[k].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Minimization incumbent rule: strictly better beyond the tolerance, or a
// tie resolved toward the lexicographically smallest sorted id set.
bool better_incumbent(double obj, const std::vector<int>& ids,
                      double best_obj, const std::vector<int>& best_ids) {
  if (obj < best_obj - kObjectiveTolerance) return true;
  if (obj <= best_obj + kObjectiveTolerance && ids < best_ids) return true;
  return false;
}

// min(C(n, p), cap + 1) without overflow.
std::uint64_t subsets_capped(std::size_t n, std::size_t p,
                             std::uint64_t cap) {
  if (p > n) return 0;
  p = std::min(p, n - p);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= p; ++i) {
    r = r * (n - p + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Flattened positive-demand pairs plus per-candidate via costs, the shared
// working form for bounds and greedy scoring. NaN marks an unusable leg.
struct CostTables {
  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  std::vector<double> demands;            // per pair
  std::vector<double> direct;             // per pair
  std::vector<std::vector<double>> via;   // [candidate][pair]

  static CostTables build(const ProblemInstance& instance,
                          const Scenario& scenario) {
    CostTables t;
    const std::size_t n = instance.origin_count();
    const std::size_t jc = instance.airport_count();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < jc; ++j) {
        const std::int64_t d = instance.demand(i, j);
        if (d <= 0) continue;
        t.pairs.push_back({i, j});
        t.demands.push_back(static_cast<double>(d));
        t.direct.push_back(
            instance.has_ground_to_airport(i, j)
                ? scenario.beta * instance.ground_to_airport(i, j)
                : std::numeric_limits<double>::quiet_NaN());
      }
    }
    t.via.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      t.via[k].reserve(t.pairs.size());
      for (const Pair& pr : t.pairs) {
        t.via[k].push_back(via_hub_cost(pr.i, pr.j, k, scenario, instance));
      }
    }
    return t;
  }
};

// Candidates ranked by the objective they achieve alone (ascending), which
// is single-hub savings descending; ties by zone id.
std::vector<std::size_t> savings_order(const CostTables& tables,
                                       const ProblemInstance& instance) {
  const std::size_t n = instance.origin_count();
  std::vector<double> score(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t q = 0; q < tables.pairs.size(); ++q) {
      const double direct = tables.direct[q];
      const double via = tables.via[k][q];
      double unit;
      if (!std::isnan(direct) && !std::isnan(via)) {
        unit = std::min(direct, via);
      } else if (!std::isnan(direct)) {
        unit = direct;
      } else if (!std::isnan(via)) {
        unit = via;
      } else {
        unit = kInf;
      }
      s += tables.demands[q] * unit;
    }
    score[k] = s;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (score[a] != score[b]) return score[a] < score[b];
                     return instance.origins[a].id < instance.origins[b].id;
                   });
  return order;
}

// Greedy construction on top of `base`: repeatedly add the candidate with
// the largest objective reduction. When rng is non-null, each step picks
// uniformly among the best `grasp_width` candidates instead.
std::vector<std::size_t> greedy_complete(const CostTables& tables,
                                         const ProblemInstance& instance,
                                         std::vector<std::size_t> base,
                                         std::size_t target_p,
                                         std::mt19937_64* rng = nullptr,
                                         std::size_t grasp_width = 3) {
  const std::size_t n = instance.origin_count();
  const std::size_t np = tables.pairs.size();

  // Current best unit cost per pair given `base` (direct plus open hubs).
  std::vector<double> current(np);
  for (std::size_t q = 0; q < np; ++q) current[q] = tables.direct[q];
  std::vector<bool> member(n, false);
  for (std::size_t k : base) {
    member[k] = true;
    for (std::size_t q = 0; q < np; ++q) {
      const double via = tables.via[k][q];
      if (!std::isnan(via) && (std::isnan(current[q]) || via < current[q])) {
        current[q] = via;
      }
    }
  }

  while (base.size() < target_p) {
    struct Scored {
      std::size_t k;
      double objective;
    };
    std::vector<Scored> scored;
    for (std::size_t k = 0; k < n; ++k) {
      if (member[k]) continue;
      double s = 0.0;
      for (std::size_t q = 0; q < np; ++q) {
        double unit = current[q];
        const double via = tables.via[k][q];
        if (!std::isnan(via) && (std::isnan(unit) || via < unit)) unit = via;
        if (std::isnan(unit)) {
          s = kInf;
          break;
        }
        s += tables.demands[q] * unit;
      }
      scored.push_back({k, s});
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [&](const Scored& a, const Scored& b) {
                       if (a.objective != b.objective)
                         return a.objective < b.objective;
                       return instance.origins[a.k].id <
                              instance.origins[b.k].id;
                     });
    std::size_t pick = 0;
    if (rng) {
      const std::size_t width = std::min(grasp_width, scored.size());
      pick = std::uniform_int_distribution<std::size_t>(0, width - 1)(*rng);
    }
    const std::size_t k = scored[pick].k;
    base.push_back(k);
    member[k] = true;
    for (std::size_t q = 0; q < np; ++q) {
      const double via = tables.via[k][q];
      if (!std::isnan(via) && (std::isnan(current[q]) || via < current[q])) {
        current[q] = via;
      }
    }
  }
  return base;
}

// Best-improvement swap descent; mutates `current`, returns its objective.
double improve_by_swaps(const ProblemInstance& instance,
                        const Scenario& scenario,
                        std::vector<std::size_t>& current,
                        std::int64_t& evaluations) {
  const std::size_t n = instance.origin_count();
  double current_obj = evaluate_hub_set(current, scenario, instance).objective;
  ++evaluations;
  while (true) {
    std::sort(current.begin(), current.end(),
              [&](std::size_t a, std::size_t b) {
                return instance.origins[a].id < instance.origins[b].id;
              });
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::find(current.begin(), current.end(), k) == current.end()) {
        outside.push_back(k);
      }
    }
    std::sort(outside.begin(), outside.end(),
              [&](std::size_t a, std::size_t b) {
                return instance.origins[a].id < instance.origins[b].id;
              });

    bool found = false;
    double best_swap_obj = 0.0;
    std::size_t best_out = 0, best_in = 0;
    for (std::size_t out_pos = 0; out_pos < current.size(); ++out_pos) {
      for (std::size_t in : outside) {
        std::vector<std::size_t> trial = current;
        trial[out_pos] = in;
        const double obj =
            evaluate_hub_set(trial, scenario, instance).objective;
        ++evaluations;
        if (!found || obj < best_swap_obj) {
          found = true;
          best_swap_obj = obj;
          best_out = out_pos;
          best_in = in;
        }
      }
    }
    if (!found || best_swap_obj >= current_obj - kObjectiveTolerance) break;
    current[best_out] = best_in;
    current_obj = best_swap_obj;
  }
  return current_obj;
}

HubSolution finalize(std::span<const std::size_t> hubs,
                     const Scenario& scenario,
                     const ProblemInstance& instance, std::string solver,
                     std::int64_t iterations, double wall_seconds,
                     bool proven, std::optional<double> gap) {
  const Evaluation eval = evaluate_hub_set(hubs, scenario, instance);
  HubSolution solution = make_solution(hubs, eval, scenario, instance);
  solution.meta.solver = std::move(solver);
  solution.meta.iterations = iterations;
  solution.meta.wall_time_seconds = wall_seconds;
  solution.meta.proven = proven;
  solution.meta.gap = gap;
  return solution;
}

}  // namespace

double relaxed_lower_bound(const ProblemInstance& instance,
                           const Scenario& scenario,
                           std::span<const std::size_t> committed,
                           std::span<const std::size_t> available) {
  const CostTables tables = CostTables::build(instance, scenario);
  std::vector<double> contributions;
  contributions.reserve(tables.pairs.size());
  for (std::size_t q = 0; q < tables.pairs.size(); ++q) {
    double unit = tables.direct[q];
    for (std::size_t k : committed) {
      const double via = tables.via[k][q];
      if (!std::isnan(via) && (std::isnan(unit) || via < unit)) unit = via;
    }
    for (std::size_t k : available) {
      const double via = tables.via[k][q];
      if (!std::isnan(via) && (std::isnan(unit) || via < unit)) unit = via;
    }
    if (std::isnan(unit)) {
      const auto& pr = tables.pairs[q];
      throw UnroutableError(instance.origins[pr.i].id,
                            instance.airports[pr.j].id);
    }
    contributions.push_back(tables.demands[q] * unit);
  }
  return pairwise_sum(contributions);
}

HubSolution solve_brute_force(const ProblemInstance& instance,
                              const Scenario& scenario,
                              const SolverOptions& options) {
  ensure_valid(scenario, instance.origin_count());
  const auto start = Clock::now();
  const std::size_t n = instance.origin_count();
  const std::size_t p = static_cast<std::size_t>(scenario.p);

  const std::uint64_t count = subsets_capped(n, p, options.enumeration_cap);
  if (count > options.enumeration_cap) {
    throw std::runtime_error(
        "brute force refused: C(" + std::to_string(n) + ", " +
        std::to_string(p) + ") exceeds enumeration cap " +
        std::to_string(options.enumeration_cap));
  }

  std::vector<std::size_t> subset(p);
  std::iota(subset.begin(), subset.end(), 0);

  bool have_best = false;
  double best_obj = 0.0;
  std::vector<int> best_ids;
  std::vector<std::size_t> best_set;
  std::int64_t evaluated = 0;

  while (true) {
    const Evaluation eval = evaluate_hub_set(subset, scenario, instance);
    ++evaluated;
    std::vector<int> ids = sorted_zone_ids(subset, instance);
    if (!have_best || better_incumbent(eval.objective, ids, best_obj,
                                       best_ids)) {
      have_best = true;
      best_obj = eval.objective;
      best_ids = std::move(ids);
      best_set = subset;
    }
    // next p-combination of [0, n)
    std::size_t idx = p;
    while (idx > 0 && subset[idx - 1] == n - p + (idx - 1)) --idx;
    if (idx == 0) break;
    ++subset[idx - 1];
    for (std::size_t t = idx; t < p; ++t) subset[t] = subset[t - 1] + 1;
  }

  return finalize(best_set, scenario, instance, "brute_force", evaluated,
                  seconds_since(start), /*proven=*/true, /*gap=*/0.0);
}

namespace {

struct BnbSearch {
  const ProblemInstance& instance;
  const Scenario& scenario;
  const CostTables& tables;
  const std::vector<std::size_t>& order;
  std::size_t p = 0;
  double gap_tolerance = 0.0;
  Clock::time_point start;
  double time_limit_seconds = 0.0;

  double incumbent_obj = kInf;
  std::vector<int> incumbent_ids{};
  std::vector<std::size_t> incumbent_set{};
  std::int64_t nodes = 0;
  bool timed_out = false;
  double abandoned_lb = kInf;  // min bound over subtrees cut by gap or time

  // cur_stack[d][q]: cheapest unit cost of pair q with the first d committed
  // hubs open (NaN while no option exists). Updated incrementally on the
  // include branch; min() order does not change the values, so bounds and
  // node counts stay identical to a from-scratch computation.
  std::vector<std::vector<double>> cur_stack{};
  std::vector<double> savings_scratch{};
  std::vector<double> relaxed_unit_scratch{};
  std::vector<double> relaxed_scratch{};

  void prepare() {
    const std::size_t np = tables.pairs.size();
    cur_stack.assign(p + 1, std::vector<double>(np));
    cur_stack[0] = tables.direct;
    savings_scratch.assign(order.size(), 0.0);
    relaxed_unit_scratch.assign(np, 0.0);
    relaxed_scratch.assign(np, 0.0);
  }

  void offer(std::span<const std::size_t> set, double objective) {
    std::vector<int> ids = sorted_zone_ids(set, instance);
    if (incumbent_set.empty() && incumbent_obj == kInf) {
      incumbent_obj = objective;
      incumbent_ids = std::move(ids);
      incumbent_set.assign(set.begin(), set.end());
      return;
    }
    if (better_incumbent(objective, ids, incumbent_obj, incumbent_ids)) {
      incumbent_obj = objective;
      incumbent_ids = std::move(ids);
      incumbent_set.assign(set.begin(), set.end());
    }
  }

  // Exact objective at a full leaf. Under per-pair allocation the
  // incremental unit costs already hold the answer and yield doubles
  // identical to evaluate_hub_set (same min sets, same pair order, same
  // pairwise reduction). Single-allocation leaves need the full
  // evaluation, whose value the per-pair bound still under-estimates
  // admissibly.
  double leaf_objective(std::span<const std::size_t> set) {
    if (scenario.allocation_mode == AllocationMode::kSinglePerOrigin) {
      return evaluate_hub_set(set, scenario, instance).objective;
    }
    const std::vector<double>& cur = cur_stack[p];
    for (std::size_t q = 0; q < tables.pairs.size(); ++q) {
      if (std::isnan(cur[q])) {
        const auto& pr = tables.pairs[q];
        throw UnroutableError(instance.origins[pr.i].id,
                              instance.airports[pr.j].id);
      }
      relaxed_scratch[q] = tables.demands[q] * cur[q];
    }
    return pairwise_sum(relaxed_scratch);
  }

  // Two admissible lower bounds, the larger wins. The first relaxes the
  // cardinality limit (every still-available candidate open). The second
  // starts from the committed-hubs cost and subtracts the r largest
  // single-hub savings; subadditivity of savings keeps it valid and it is
  // far tighter when few slots remain.
  double node_bound(std::size_t depth, std::size_t t) {
    const std::size_t np = tables.pairs.size();
    const std::size_t avail = order.size() - t;
    const std::size_t r = p - depth;
    const std::vector<double>& cur = cur_stack[depth];

    bool cur_complete = true;
    for (std::size_t q = 0; q < np; ++q) {
      relaxed_unit_scratch[q] = cur[q];
      if (std::isnan(cur[q])) cur_complete = false;
    }
    // Candidate-major sweep keeps each via row contiguous in cache.
    for (std::size_t pos = t; pos < order.size(); ++pos) {
      const std::vector<double>& via = tables.via[order[pos]];
      double save = 0.0;
      for (std::size_t q = 0; q < np; ++q) {
        const double v = via[q];
        if (std::isnan(v)) continue;
        if (std::isnan(relaxed_unit_scratch[q]) ||
            v < relaxed_unit_scratch[q]) {
          relaxed_unit_scratch[q] = v;
        }
        if (!std::isnan(cur[q]) && v < cur[q]) {
          save += tables.demands[q] * (cur[q] - v);
        }
      }
      savings_scratch[pos - t] = save;
    }
    for (std::size_t q = 0; q < np; ++q) {
      if (std::isnan(relaxed_unit_scratch[q])) {
        const auto& pr = tables.pairs[q];
        throw UnroutableError(instance.origins[pr.i].id,
                              instance.airports[pr.j].id);
      }
      relaxed_scratch[q] = tables.demands[q] * relaxed_unit_scratch[q];
    }
    double bound = pairwise_sum(relaxed_scratch);

    if (cur_complete && r < avail) {
      double cur_total = 0.0;
      for (std::size_t q = 0; q < np; ++q) {
        cur_total += tables.demands[q] * cur[q];
      }
      std::nth_element(savings_scratch.begin(), savings_scratch.begin() + r,
                       savings_scratch.begin() + avail,
                       std::greater<double>());
      double top = 0.0;
      for (std::size_t s = 0; s < r; ++s) top += savings_scratch[s];
      bound = std::max(bound, cur_total - top);
    }
    return bound;
  }

  void push_include(std::size_t depth, std::size_t candidate) {
    const std::vector<double>& from = cur_stack[depth];
    std::vector<double>& to = cur_stack[depth + 1];
    const std::vector<double>& via = tables.via[candidate];
    for (std::size_t q = 0; q < from.size(); ++q) {
      double unit = from[q];
      if (!std::isnan(via[q]) && (std::isnan(unit) || via[q] < unit)) {
        unit = via[q];
      }
      to[q] = unit;
    }
  }

  void dfs(std::size_t t, std::vector<std::size_t>& chosen) {
    if (timed_out) return;
    ++nodes;

    if (chosen.size() == p) {
      offer(chosen, leaf_objective(chosen));
      return;
    }
    const std::size_t avail = order.size() - t;
    if (chosen.size() + avail < p) return;  // cannot reach p hubs
    if (chosen.size() + avail == p) {
      std::vector<std::size_t> forced = chosen;
      for (std::size_t pos = t; pos < order.size(); ++pos) {
        push_include(forced.size(), order[pos]);
        forced.push_back(order[pos]);
      }
      offer(forced, leaf_objective(forced));
      return;
    }

    const double bound = node_bound(chosen.size(), t);
    // Strict-plus-tolerance pruning keeps every exact tie reachable, so the
    // lexicographic tie-break matches brute force.
    if (bound > incumbent_obj + kObjectiveTolerance) return;
    if (gap_tolerance > 0.0 &&
        bound >= incumbent_obj * (1.0 - gap_tolerance)) {
      abandoned_lb = std::min(abandoned_lb, bound);
      return;
    }
    if (seconds_since(start) > time_limit_seconds) {
      timed_out = true;
      abandoned_lb = std::min(abandoned_lb, bound);
      return;
    }

    push_include(chosen.size(), order[t]);
    chosen.push_back(order[t]);
    dfs(t + 1, chosen);
    chosen.pop_back();
    if (timed_out) return;
    dfs(t + 1, chosen);
  }
};

}  // namespace

HubSolution solve_branch_and_bound(const ProblemInstance& instance,
                                   const Scenario& scenario,
                                   const SolverOptions& options) {
  ensure_valid(scenario, instance.origin_count());
  const auto start = Clock::now();
  const std::size_t p = static_cast<std::size_t>(scenario.p);

  if (p == 0) {
    return finalize({}, scenario, instance, "branch_and_bound", 1,
                    seconds_since(start), /*proven=*/true, /*gap=*/0.0);
  }

  const CostTables tables = CostTables::build(instance, scenario);
  const std::vector<std::size_t> order = savings_order(tables, instance);

  BnbSearch search{.instance = instance,
                   .scenario = scenario,
                   .tables = tables,
                   .order = order,
                   .p = p,
                   .gap_tolerance = options.gap_tolerance,
                   .start = start,
                   .time_limit_seconds = options.time_limit_seconds};
  search.prepare();

  // Greedy completion polished by swap descent seeds the incumbent; a
  // tight incumbent is what makes the bound prune.
  {
    std::vector<std::size_t> seed = greedy_complete(tables, instance, {}, p);
    std::int64_t seed_evals = 0;
    improve_by_swaps(instance, scenario, seed, seed_evals);
    search.offer(seed, evaluate_hub_set(seed, scenario, instance).objective);
  }

  std::vector<std::size_t> chosen;
  chosen.reserve(p);
  const double root_bound = search.node_bound(0, 0);
  search.dfs(0, chosen);

  double lb = std::min(search.abandoned_lb, search.incumbent_obj);
  if (search.timed_out) lb = std::min(lb, root_bound);
  double gap = 0.0;
  if (search.incumbent_obj > 0.0) {
    gap = std::max(0.0, (search.incumbent_obj - lb) / search.incumbent_obj);
  }

  return finalize(search.incumbent_set, scenario, instance,
                  "branch_and_bound", search.nodes, seconds_since(start),
                  /*proven=*/!search.timed_out, gap);
}

HubSolution solve_local_search(const ProblemInstance& instance,
                               const Scenario& scenario,
                               const SolverOptions& options) {
  ensure_valid(scenario, instance.origin_count());
  const auto start = Clock::now();
  const std::size_t p = static_cast<std::size_t>(scenario.p);

  if (p == 0) {
    return finalize({}, scenario, instance, "local_search", 1,
                    seconds_since(start), /*proven=*/false, std::nullopt);
  }

  const CostTables tables = CostTables::build(instance, scenario);
  std::int64_t evaluations = 0;

  bool have_best = false;
  double best_obj = 0.0;
  std::vector<int> best_ids;
  std::vector<std::size_t> best_set;

  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<std::size_t> current;
    if (r == 0) {
      current = greedy_complete(tables, instance, {}, p);
    } else {
      std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(r));
      current = greedy_complete(tables, instance, {}, p, &rng);
    }
    const double current_obj =
        improve_by_swaps(instance, scenario, current, evaluations);

    std::vector<int> ids = sorted_zone_ids(current, instance);
    if (!have_best ||
        better_incumbent(current_obj, ids, best_obj, best_ids)) {
      have_best = true;
      best_obj = current_obj;
      best_ids = std::move(ids);
      best_set = current;
    }
  }

  return finalize(best_set, scenario, instance, "local_search", evaluations,
                  seconds_since(start), /*proven=*/false, std::nullopt);
}

HubSolution solve(const ProblemInstance& instance, const Scenario& scenario,
                  const SolverOptions& options) {
  switch (options.method) {
    case SolveMethod::kBruteForce:
      return solve_brute_force(instance, scenario, options);
    case SolveMethod::kLocalSearch:
      return solve_local_search(instance, scenario, options);
    case SolveMethod::kBranchAndBound:
      break;
  }
  return solve_branch_and_bound(instance, scenario, options);
}

}  // namespace skyport

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

#include "skyport/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skyport {

namespace {

// Hub candidates ordered by zone id so that "first wins" tie handling
// realizes the lowest-id policy.
std::vector<std::size_t> sorted_by_zone_id(std::span<const std::size_t> hubs,
                                           const ProblemInstance& instance) {
  std::vector<std::size_t> sorted(hubs.begin(), hubs.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](std::size_t a, std::size_t b) {
              return instance.origins[a].id < instance.origins[b].id;
            });
  return sorted;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double via_hub_cost(std::size_t i, std::size_t j, std::size_t k,
                    const Scenario& scenario,
                    const ProblemInstance& instance) {
  if (!instance.has_ground_to_origin(i, k)) return kNaN;
  return scenario.beta * instance.ground_to_origin(i, k) + scenario.alpha +
         instance.aerial(k, j);
}

Route best_route(std::size_t i, std::size_t j,
                 std::span<const std::size_t> hubs, const Scenario& scenario,
                 const ProblemInstance& instance) {
  const auto sorted = sorted_by_zone_id(hubs, instance);

  Route best;
  bool has_option = false;
  if (instance.has_ground_to_airport(i, j)) {
    best.kind = RouteKind::kDirect;
    best.cost = scenario.beta * instance.ground_to_airport(i, j);
    has_option = true;
  }
  for (std::size_t k : sorted) {
    const double via = via_hub_cost(i, j, k, scenario, instance);
    if (std::isnan(via)) continue;
    if (!has_option || via < best.cost) {
      best.kind = RouteKind::kViaHub;
      best.hub = instance.origins[k].id;
      best.cost = via;
      has_option = true;
    }
  }
  if (!has_option) {
    throw UnroutableError(instance.origins[i].id, instance.airports[j].id);
  }
  return best;
}

namespace {

Evaluation evaluate_per_pair(std::span<const std::size_t> sorted_hubs,
                             const Scenario& scenario,
                             const ProblemInstance& instance) {
  const std::size_t n = instance.origin_count();
  const std::size_t jc = instance.airport_count();

  Evaluation eval;
  eval.routing.assign(n * jc, Route{});
  std::vector<double> contributions;
  contributions.reserve(n * jc);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      const std::int64_t d = instance.demand(i, j);
      if (d <= 0) continue;
      const Route route = best_route(i, j, sorted_hubs, scenario, instance);
      eval.routing[i * jc + j] = route;
      contributions.push_back(static_cast<double>(d) * route.cost);
      if (route.kind == RouteKind::kDirect) {
        ++eval.direct_count;
      } else {
        eval.per_hub_load[*route.hub] += d;
      }
    }
  }
  eval.objective = pairwise_sum(contributions);
  return eval;
}

// Each origin commits to one hub; every destination may still opt out to
// the direct route.
Evaluation evaluate_single_per_origin(std::span<const std::size_t> sorted_hubs,
                                      const Scenario& scenario,
                                      const ProblemInstance& instance) {
  const std::size_t n = instance.origin_count();
  const std::size_t jc = instance.airport_count();

  Evaluation eval;
  eval.routing.assign(n * jc, Route{});
  std::vector<double> contributions;
  contributions.reserve(n * jc);

  for (std::size_t i = 0; i < n; ++i) {
    bool any_demand = false;
    for (std::size_t j = 0; j < jc; ++j) {
      if (instance.demand(i, j) > 0) any_demand = true;
    }
    if (!any_demand) continue;

    // Pick the hub minimizing this origin's total cost with per-destination
    // direct opt-out. A missing option under some hub disqualifies it.
    bool have_choice = false;
    std::size_t chosen = 0;
    double chosen_score = 0.0;
    for (std::size_t k : sorted_hubs) {
      double score = 0.0;
      bool feasible = true;
      for (std::size_t j = 0; j < jc; ++j) {
        const std::int64_t d = instance.demand(i, j);
        if (d <= 0) continue;
        const double via = via_hub_cost(i, j, k, scenario, instance);
        const bool has_direct = instance.has_ground_to_airport(i, j);
        const double direct =
            has_direct ? scenario.beta * instance.ground_to_airport(i, j)
                       : kNaN;
        double unit;
        if (has_direct && !std::isnan(via)) {
          unit = via < direct ? via : direct;
        } else if (has_direct) {
          unit = direct;
        } else if (!std::isnan(via)) {
          unit = via;
        } else {
          feasible = false;
          break;
        }
        score += static_cast<double>(d) * unit;
      }
      if (feasible && (!have_choice || score < chosen_score)) {
        have_choice = true;
        chosen = k;
        chosen_score = score;
      }
    }

    for (std::size_t j = 0; j < jc; ++j) {
      const std::int64_t d = instance.demand(i, j);
      if (d <= 0) continue;
      Route route;
      if (have_choice) {
        route = best_route(i, j, std::span<const std::size_t>(&chosen, 1),
                           scenario, instance);
      } else {
        route = best_route(i, j, {}, scenario, instance);
      }
      eval.routing[i * jc + j] = route;
      contributions.push_back(static_cast<double>(d) * route.cost);
      if (route.kind == RouteKind::kDirect) {
        ++eval.direct_count;
      } else {
        eval.per_hub_load[*route.hub] += d;
      }
    }
  }
  eval.objective = pairwise_sum(contributions);
  return eval;
}

}  // namespace

Evaluation evaluate_hub_set(std::span<const std::size_t> hubs,
                            const Scenario& scenario,
                            const ProblemInstance& instance) {
  const auto sorted = sorted_by_zone_id(hubs, instance);
  if (scenario.allocation_mode == AllocationMode::kSinglePerOrigin) {
    return evaluate_single_per_origin(sorted, scenario, instance);
  }
  return evaluate_per_pair(sorted, scenario, instance);
}

HubSolution make_solution(std::span<const std::size_t> hubs,
                          const Evaluation& eval, const Scenario& scenario,
                          const ProblemInstance& instance) {
  (void)scenario;
  HubSolution solution;
  solution.hubs.reserve(hubs.size());
  for (std::size_t k : hubs) solution.hubs.push_back(instance.origins[k].id);
  std::sort(solution.hubs.begin(), solution.hubs.end());

  const std::size_t jc = instance.airport_count();
  for (std::size_t i = 0; i < instance.origin_count(); ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      if (instance.demand(i, j) <= 0) continue;
      PairRoute pr;
      pr.origin = instance.origins[i].id;
      pr.airport = instance.airports[j].id;
      pr.route = eval.routing[i * jc + j];
      solution.routing.push_back(std::move(pr));
    }
  }
  std::sort(solution.routing.begin(), solution.routing.end(),
            [](const PairRoute& a, const PairRoute& b) {
              return std::tie(a.origin, a.airport) <
                     std::tie(b.origin, b.airport);
            });
  solution.objective = eval.objective;
  solution.direct_count = eval.direct_count;
  return solution;
}

}  // namespace skyport

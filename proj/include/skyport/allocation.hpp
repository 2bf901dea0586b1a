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

// Routing of all demand pairs for a fixed hub set. With hubs fixed, the
// problem decomposes: every (origin, airport) pair independently picks the
// cheapest of the direct route and the routes via the open hubs. This is
// the inner problem every solver leans on.

#ifndef SKYPORT_ALLOCATION_HPP_
#define SKYPORT_ALLOCATION_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "skyport/model.hpp"

namespace skyport {

struct Evaluation {
  double objective = 0.0;               // vehicle-minutes
  std::vector<Route> routing;           // flat i * J + j; valid where d_ij > 0
  int direct_count = 0;                 // positive-demand pairs routed direct
  std::map<int, std::int64_t> per_hub_load;  // hub zone id -> routed demand

  const Route& route_at(std::size_t i, std::size_t j,
                        std::size_t airport_count) const {
    return routing[i * airport_count + j];
  }
};

// beta * c_ik + alpha + c_kj. NaN when the ground leg is absent.
double via_hub_cost(std::size_t i, std::size_t j, std::size_t k,
                    const Scenario& scenario, const ProblemInstance& instance);

// Cheapest route for one pair over {direct} and the given hub candidates
// (indices into instance.origins). Ties resolve to direct, then to the
// lowest hub zone id. Throws UnroutableError when no option exists.
Route best_route(std::size_t i, std::size_t j,
                 std::span<const std::size_t> hubs, const Scenario& scenario,
                 const ProblemInstance& instance);

// Routes every positive-demand pair against the hub set and sums the exact
// objective. |hubs| may be any size (solvers bound with partial sets).
Evaluation evaluate_hub_set(std::span<const std::size_t> hubs,
                            const Scenario& scenario,
                            const ProblemInstance& instance);

// Packages an evaluation as a HubSolution (ids sorted, routing sorted by
// zone id pair).
HubSolution make_solution(std::span<const std::size_t> hubs,
                          const Evaluation& eval, const Scenario& scenario,
                          const ProblemInstance& instance);

}  // namespace skyport

#endif  // SKYPORT_ALLOCATION_HPP_

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

#ifndef SKYPORT_SOLVER_HPP_
#define SKYPORT_SOLVER_HPP_

#include <cstdint>
#include <span>

#include "skyport/allocation.hpp"
#include "skyport/model.hpp"

namespace skyport {

enum class SolveMethod { kBruteForce, kBranchAndBound, kLocalSearch };

struct SolverOptions {
  SolveMethod method = SolveMethod::kBranchAndBound;
  double time_limit_seconds = 600.0;
  double gap_tolerance = 0.0;  // relative; 0 = exact
  std::uint64_t seed = 1;      // local search
  int restarts = 10;           // local search
  std::uint64_t enumeration_cap = 10'000'000;  // brute force subset cap
};

// Incumbent comparisons use this absolute tolerance; ties resolve to the
// lexicographically smallest sorted hub-id set.
inline constexpr double kObjectiveTolerance = 1e-6;

// Exhaustive oracle: evaluates every p-subset. Refuses when C(N, p)
// exceeds options.enumeration_cap.
HubSolution solve_brute_force(const ProblemInstance& instance,
                              const Scenario& scenario,
                              const SolverOptions& options = {});

// Exact search over include/exclude decisions, candidates ordered by
// single-hub savings. Admissible node bound: every still-available
// candidate treated as open (relaxes the cardinality limit).
HubSolution solve_branch_and_bound(const ProblemInstance& instance,
                                   const Scenario& scenario,
                                   const SolverOptions& options = {});

// Greedy construction plus best-improvement swaps, multi-restart.
// Always feasible; flagged non-proven.
HubSolution solve_local_search(const ProblemInstance& instance,
                               const Scenario& scenario,
                               const SolverOptions& options = {});

HubSolution solve(const ProblemInstance& instance, const Scenario& scenario,
                  const SolverOptions& options = {});

// Lower bound used at a search node: committed hubs plus all still-available
// candidates assumed open. Exposed so tests can check admissibility against
// exhaustive completion enumeration.
double relaxed_lower_bound(const ProblemInstance& instance,
                           const Scenario& scenario,
                           std::span<const std::size_t> committed,
                           std::span<const std::size_t> available);

}  // namespace skyport

#endif  // SKYPORT_SOLVER_HPP_

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

#include "skyport/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace skyport {

std::optional<std::size_t> ProblemInstance::origin_index(int zone_id) const {
  for (std::size_t i = 0; i < origins.size(); ++i) {
    if (origins[i].id == zone_id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ProblemInstance::airport_index(int zone_id) const {
  for (std::size_t j = 0; j < airports.size(); ++j) {
    if (airports[j].id == zone_id) return j;
  }
  return std::nullopt;
}

namespace {

void check_zone(const Zone& z, std::vector<std::string>& out) {
  if (std::isnan(z.lat) || z.lat < -90.0 || z.lat > 90.0) {
    out.push_back("zone " + std::to_string(z.id) + ": latitude out of range");
  }
  if (std::isnan(z.lon) || z.lon < -180.0 || z.lon > 180.0) {
    out.push_back("zone " + std::to_string(z.id) + ": longitude out of range");
  }
}

}  // namespace

std::vector<std::string> validate(const ProblemInstance& instance) {
  std::vector<std::string> violations;
  const std::size_t n = instance.origin_count();
  const std::size_t j_count = instance.airport_count();

  if (j_count == 0) violations.push_back("no airports");

  std::set<int> ids;
  for (const Zone& z : instance.origins) {
    if (!ids.insert(z.id).second) {
      violations.push_back("duplicate zone id " + std::to_string(z.id));
    }
    if (z.is_airport) {
      violations.push_back("origin zone " + std::to_string(z.id) +
                           " flagged as airport");
    }
    check_zone(z, violations);
  }
  for (const Zone& z : instance.airports) {
    if (!ids.insert(z.id).second) {
      violations.push_back("duplicate zone id " + std::to_string(z.id));
    }
    if (!z.is_airport) {
      violations.push_back("airport zone " + std::to_string(z.id) +
                           " not flagged as airport");
    }
    check_zone(z, violations);
  }

  if (instance.ground_cost.rows() != n ||
      instance.ground_cost.cols() != n + j_count) {
    violations.push_back("ground_cost shape mismatch");
  }
  if (instance.aerial_cost.rows() != n ||
      instance.aerial_cost.cols() != j_count) {
    violations.push_back("aerial_cost shape mismatch");
  }
  if (instance.demand.rows() != n || instance.demand.cols() != j_count) {
    violations.push_back("demand shape mismatch");
  }
  if (!violations.empty()) return violations;  // shapes gate the entry checks

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n + j_count; ++c) {
      if (!instance.ground_cost.has(i, c)) continue;
      const double v = instance.ground_cost(i, c);
      if (!(v >= 0.0) || std::isinf(v)) {
        violations.push_back("negative or non-finite ground cost at (" +
                             std::to_string(i) + "," + std::to_string(c) +
                             ")");
      }
    }
    if (!instance.ground_cost.has(i, i) || instance.ground_cost(i, i) != 0.0) {
      violations.push_back("ground_cost diagonal not zero at origin " +
                           std::to_string(instance.origins[i].id));
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < j_count; ++j) {
      const double v = instance.aerial_cost(k, j);
      if (std::isnan(v) || std::isinf(v) || v < 0.0) {
        violations.push_back("absent, negative or non-finite aerial cost at (" +
                             std::to_string(instance.origins[k].id) + "," +
                             std::to_string(instance.airports[j].id) + ")");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < j_count; ++j) {
      const std::int64_t d = instance.demand(i, j);
      if (d < 0) {
        violations.push_back("negative demand at (" +
                             std::to_string(instance.origins[i].id) + "," +
                             std::to_string(instance.airports[j].id) + ")");
      }
      if (d > 0 && !instance.has_ground_to_airport(i, j)) {
        violations.push_back("unroutable demand pair (" +
                             std::to_string(instance.origins[i].id) + "," +
                             std::to_string(instance.airports[j].id) +
                             "): direct ground cost absent");
      }
    }
  }

  return violations;
}

std::vector<std::string> validate(const Scenario& scenario,
                                  std::size_t candidate_count) {
  std::vector<std::string> violations;
  if (std::isnan(scenario.alpha) || scenario.alpha < 0.0) {
    violations.push_back("alpha must be >= 0");
  }
  if (std::isnan(scenario.beta) || scenario.beta < 1.0) {
    violations.push_back("beta must be >= 1");
  }
  if (scenario.p < 0 ||
      static_cast<std::size_t>(scenario.p) > candidate_count) {
    violations.push_back("p must be in [0, " +
                         std::to_string(candidate_count) + "]");
  }
  return violations;
}

namespace {

void throw_violations(const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid input:";
  for (const auto& v : violations) msg << "\n  - " << v;
  throw std::invalid_argument(msg.str());
}

}  // namespace

void ensure_valid(const ProblemInstance& instance) {
  throw_violations(validate(instance));
}

void ensure_valid(const Scenario& scenario, std::size_t candidate_count) {
  throw_violations(validate(scenario, candidate_count));
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double recompute_objective(const HubSolution& solution,
                           const ProblemInstance& instance) {
  std::vector<double> contributions;
  contributions.reserve(solution.routing.size());
  for (const PairRoute& pr : solution.routing) {
    const auto i = instance.origin_index(pr.origin);
    const auto j = instance.airport_index(pr.airport);
    if (!i || !j) {
      throw std::invalid_argument("routing references unknown zone pair (" +
                                  std::to_string(pr.origin) + "," +
                                  std::to_string(pr.airport) + ")");
    }
    contributions.push_back(
        static_cast<double>(instance.demand(*i, *j)) * pr.route.cost);
  }
  return pairwise_sum(contributions);
}

}  // namespace skyport

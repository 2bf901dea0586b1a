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

#include "skyport/json_io.hpp"

#include <json.hpp>

namespace skyport {

using nlohmann::json;

namespace {

json zone_to_json(const Zone& z) {
  return json{{"id", z.id},
              {"name", z.name},
              {"lat", z.lat},
              {"lon", z.lon},
              {"is_airport", z.is_airport}};
}

Zone zone_from_json(const json& j) {
  Zone z;
  z.id = j.at("id").get<int>();
  z.name = j.at("name").get<std::string>();
  z.lat = j.at("lat").get<double>();
  z.lon = j.at("lon").get<double>();
  z.is_airport = j.at("is_airport").get<bool>();
  return z;
}

json cost_matrix_to_json(const CostMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.has(r, c)) {
        row.push_back(m(r, c));
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CostMatrix cost_matrix_from_json(const json& j, std::size_t cols_expected) {
  const std::size_t rows = j.size();
  CostMatrix m(rows, cols_expected);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (row.size() != cols_expected) {
      throw std::invalid_argument("cost matrix row " + std::to_string(r) +
                                  " has wrong width");
    }
    for (std::size_t c = 0; c < cols_expected; ++c) {
      if (!row.at(c).is_null()) m(r, c) = row.at(c).get<double>();
    }
  }
  return m;
}

const char* kind_name(RouteKind k) {
  return k == RouteKind::kDirect ? "DIRECT" : "VIA_HUB";
}

RouteKind kind_from_name(const std::string& s) {
  if (s == "DIRECT") return RouteKind::kDirect;
  if (s == "VIA_HUB") return RouteKind::kViaHub;
  throw std::invalid_argument("unknown route kind: " + s);
}

}  // namespace

std::string allocation_mode_name(AllocationMode mode) {
  return mode == AllocationMode::kPerPair ? "PER_PAIR" : "SINGLE_PER_ORIGIN";
}

AllocationMode allocation_mode_from_name(const std::string& name) {
  if (name == "PER_PAIR") return AllocationMode::kPerPair;
  if (name == "SINGLE_PER_ORIGIN") return AllocationMode::kSinglePerOrigin;
  throw std::invalid_argument("unknown allocation mode: " + name);
}

std::string to_json(const ProblemInstance& instance, int indent) {
  json j;
  json origins = json::array();
  for (const Zone& z : instance.origins) origins.push_back(zone_to_json(z));
  json airports = json::array();
  for (const Zone& z : instance.airports) airports.push_back(zone_to_json(z));
  j["origins"] = std::move(origins);
  j["airports"] = std::move(airports);
  j["ground_cost"] = cost_matrix_to_json(instance.ground_cost);
  j["aerial_cost"] = cost_matrix_to_json(instance.aerial_cost);
  json demand = json::array();
  for (std::size_t r = 0; r < instance.demand.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < instance.demand.cols(); ++c) {
      row.push_back(instance.demand(r, c));
    }
    demand.push_back(std::move(row));
  }
  j["demand"] = std::move(demand);
  return j.dump(indent);
}

ProblemInstance instance_from_json(const std::string& text) {
  const json j = json::parse(text);
  ProblemInstance instance;
  for (const json& z : j.at("origins")) {
    instance.origins.push_back(zone_from_json(z));
  }
  for (const json& z : j.at("airports")) {
    instance.airports.push_back(zone_from_json(z));
  }
  const std::size_t n = instance.origins.size();
  const std::size_t jc = instance.airports.size();
  instance.ground_cost = cost_matrix_from_json(j.at("ground_cost"), n + jc);
  if (instance.ground_cost.rows() != n) {
    throw std::invalid_argument("ground_cost row count mismatch");
  }
  instance.aerial_cost = cost_matrix_from_json(j.at("aerial_cost"), jc);
  if (instance.aerial_cost.rows() != n) {
    throw std::invalid_argument("aerial_cost row count mismatch");
  }
  const json& demand = j.at("demand");
  if (demand.size() != n) {
    throw std::invalid_argument("demand row count mismatch");
  }
  instance.demand = DemandMatrix(n, jc);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = demand.at(r);
    if (row.size() != jc) {
      throw std::invalid_argument("demand row " + std::to_string(r) +
                                  " has wrong width");
    }
    for (std::size_t c = 0; c < jc; ++c) {
      instance.demand(r, c) = row.at(c).get<std::int64_t>();
    }
  }
  return instance;
}

std::string to_json(const Scenario& scenario, int indent) {
  json j{{"alpha", scenario.alpha},
         {"beta", scenario.beta},
         {"p", scenario.p},
         {"allocation_mode", allocation_mode_name(scenario.allocation_mode)},
         {"tie_break", "DIRECT_THEN_LOWEST_ID"}};
  return j.dump(indent);
}

Scenario scenario_from_json(const std::string& text) {
  const json j = json::parse(text);
  Scenario s;
  s.alpha = j.at("alpha").get<double>();
  s.beta = j.at("beta").get<double>();
  s.p = j.at("p").get<int>();
  if (j.contains("allocation_mode")) {
    s.allocation_mode =
        allocation_mode_from_name(j.at("allocation_mode").get<std::string>());
  }
  if (j.contains("tie_break") &&
      j.at("tie_break").get<std::string>() != "DIRECT_THEN_LOWEST_ID") {
    throw std::invalid_argument("unknown tie_break policy");
  }
  return s;
}

std::string to_json(const HubSolution& solution, int indent,
                    bool include_meta) {
  json j;
  j["hubs"] = solution.hubs;
  json routing = json::array();
  for (const PairRoute& pr : solution.routing) {
    json entry{{"origin", pr.origin},
               {"airport", pr.airport},
               {"kind", kind_name(pr.route.kind)},
               {"cost", pr.route.cost}};
    if (pr.route.hub) entry["hub"] = *pr.route.hub;
    routing.push_back(std::move(entry));
  }
  j["routing"] = std::move(routing);
  j["objective"] = solution.objective;
  j["direct_count"] = solution.direct_count;
  if (include_meta) {
    json meta{{"solver", solution.meta.solver},
              {"iterations", solution.meta.iterations},
              {"wall_time_seconds", solution.meta.wall_time_seconds},
              {"proven", solution.meta.proven}};
    if (solution.meta.gap) meta["gap"] = *solution.meta.gap;
    j["meta"] = std::move(meta);
  }
  return j.dump(indent);
}

HubSolution solution_from_json(const std::string& text) {
  const json j = json::parse(text);
  HubSolution s;
  s.hubs = j.at("hubs").get<std::vector<int>>();
  for (const json& entry : j.at("routing")) {
    PairRoute pr;
    pr.origin = entry.at("origin").get<int>();
    pr.airport = entry.at("airport").get<int>();
    pr.route.kind = kind_from_name(entry.at("kind").get<std::string>());
    pr.route.cost = entry.at("cost").get<double>();
    if (entry.contains("hub")) pr.route.hub = entry.at("hub").get<int>();
    if (pr.route.kind == RouteKind::kViaHub && !pr.route.hub) {
      throw std::invalid_argument("VIA_HUB route missing hub id");
    }
    s.routing.push_back(std::move(pr));
  }
  s.objective = j.at("objective").get<double>();
  s.direct_count = j.at("direct_count").get<int>();
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    s.meta.solver = meta.at("solver").get<std::string>();
    s.meta.iterations = meta.at("iterations").get<std::int64_t>();
    s.meta.wall_time_seconds = meta.at("wall_time_seconds").get<double>();
    s.meta.proven = meta.at("proven").get<bool>();
    if (meta.contains("gap")) s.meta.gap = meta.at("gap").get<double>();
  }
  return s;
}

}  // namespace skyport

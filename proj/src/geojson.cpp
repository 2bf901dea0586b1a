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

#include "skyport/geojson.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace skyport {

using nlohmann::json;

namespace {

json point_feature(const Zone& z, const char* role) {
  return json{{"type", "Feature"},
              {"geometry",
               {{"type", "Point"}, {"coordinates", {z.lon, z.lat}}}},
              {"properties",
               {{"id", z.id}, {"name", z.name}, {"role", role}}}};
}

}  // namespace

std::string solution_geojson(const ProblemInstance& instance,
                             const HubSolution& solution, int indent) {
  const std::set<int> hub_ids(solution.hubs.begin(), solution.hubs.end());

  json features = json::array();
  for (const Zone& z : instance.origins) {
    features.push_back(point_feature(z, hub_ids.count(z.id) ? "hub" : "origin"));
  }
  for (const Zone& z : instance.airports) {
    features.push_back(point_feature(z, "airport"));
  }

  for (const PairRoute& pr : solution.routing) {
    const auto i = instance.origin_index(pr.origin);
    const auto j = instance.airport_index(pr.airport);
    if (!i || !j) {
      throw std::invalid_argument("solution references unknown zone pair (" +
                                  std::to_string(pr.origin) + "," +
                                  std::to_string(pr.airport) + ")");
    }
    const Zone& origin = instance.origins[*i];
    const Zone& airport = instance.airports[*j];

    json coords = json::array();
    coords.push_back({origin.lon, origin.lat});
    json properties{{"origin", pr.origin},
                    {"airport", pr.airport},
                    {"demand", instance.demand(*i, *j)},
                    {"cost", pr.route.cost},
                    {"kind", pr.route.kind == RouteKind::kDirect
                                 ? "DIRECT"
                                 : "VIA_HUB"}};
    if (pr.route.kind == RouteKind::kViaHub) {
      const auto k = instance.origin_index(*pr.route.hub);
      if (!k) {
        throw std::invalid_argument("solution references unknown hub " +
                                    std::to_string(*pr.route.hub));
      }
      const Zone& hub = instance.origins[*k];
      coords.push_back({hub.lon, hub.lat});
      properties["hub"] = hub.id;
    }
    coords.push_back({airport.lon, airport.lat});

    features.push_back(json{{"type", "Feature"},
                            {"geometry",
                             {{"type", "LineString"},
                              {"coordinates", std::move(coords)}}},
                            {"properties", std::move(properties)}});
  }

  const json collection{{"type", "FeatureCollection"},
                        {"features", std::move(features)}};
  return collection.dump(indent);
}

}  // namespace skyport

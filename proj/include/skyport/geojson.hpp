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

#ifndef SKYPORT_GEOJSON_HPP_
#define SKYPORT_GEOJSON_HPP_

#include <string>

#include "skyport/model.hpp"

namespace skyport {

// FeatureCollection with one Point per zone (role: origin | hub | airport)
// and one LineString per routed positive-demand pair, with properties
// {origin, hub?, airport, demand, cost, kind}.
std::string solution_geojson(const ProblemInstance& instance,
                             const HubSolution& solution, int indent = 2);

}  // namespace skyport

#endif  // SKYPORT_GEOJSON_HPP_

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

// Canonical JSON schemas. Field names follow the domain model exactly;
// absent cost entries are JSON null. serialize -> parse is identity.

#ifndef SKYPORT_JSON_IO_HPP_
#define SKYPORT_JSON_IO_HPP_

#include <string>

#include "skyport/model.hpp"

namespace skyport {

std::string to_json(const ProblemInstance& instance, int indent = 2);
std::string to_json(const Scenario& scenario, int indent = 2);
// include_meta=false omits the volatile meta block (wall time) so reruns
// produce byte-identical files.
std::string to_json(const HubSolution& solution, int indent = 2,
                    bool include_meta = true);

ProblemInstance instance_from_json(const std::string& text);
Scenario scenario_from_json(const std::string& text);
HubSolution solution_from_json(const std::string& text);

std::string allocation_mode_name(AllocationMode mode);
AllocationMode allocation_mode_from_name(const std::string& name);

}  // namespace skyport

#endif  // SKYPORT_JSON_IO_HPP_

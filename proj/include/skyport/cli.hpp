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

#ifndef SKYPORT_CLI_HPP_
#define SKYPORT_CLI_HPP_

#include <utility>
#include <vector>

#include "skyport/model.hpp"
#include "skyport/solver.hpp"

namespace skyport::cli {

struct SweepSpec {
  std::vector<int> p_values;  // sorted ascending, deduplicated
  std::vector<std::pair<double, double>> scenarios;  // (alpha, beta)
  AllocationMode mode = AllocationMode::kPerPair;
  SolverOptions options;
  int jobs = 1;

  static SweepSpec defaults();
};

// Exit codes: 0 success, 1 solver failure, 2 input error.
int run(int argc, const char* const* argv);

}  // namespace skyport::cli

#endif  // SKYPORT_CLI_HPP_

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

#ifndef SKYPORT_MPS_WRITER_HPP_
#define SKYPORT_MPS_WRITER_HPP_

#include <string>
#include <string_view>

#include "skyport/model.hpp"

namespace skyport {

// Full integer program in MPS exchange format, for cross-checks with
// external MILP solvers. All variables are binary (INTORG/INTEND block):
//   y_<k>      hub open at candidate zone k
//   x_<i>_<j>_<k>  pair (i, j) routed via hub k
//   z_<i>_<j>      pair (i, j) served direct
// over zone ids, with per-pair routing equalities, openness inequalities
// and the hub cardinality equality. x variables whose ground leg is absent
// are fixed to zero. Throws UnroutableError when a positive-demand pair
// has no direct cost.
std::string write_mps(const ProblemInstance& instance,
                      const Scenario& scenario,
                      std::string_view problem_name = "SKYPORT");

}  // namespace skyport

#endif  // SKYPORT_MPS_WRITER_HPP_

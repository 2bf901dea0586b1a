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

#include "skyport/mps_writer.hpp"

#include <fmt/format.h>

#include <string>
#include <vector>

namespace skyport {

namespace {

void entry(std::string& out, const std::string& column,
           const std::string& row, double value) {
  fmt::format_to(std::back_inserter(out), "    {:<9} {:<9} {:.15g}\n", column,
                 row, value);
}

}  // namespace

std::string write_mps(const ProblemInstance& instance,
                      const Scenario& scenario,
                      std::string_view problem_name) {
  const std::size_t n = instance.origin_count();
  const std::size_t jc = instance.airport_count();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      if (instance.demand(i, j) > 0 && !instance.has_ground_to_airport(i, j)) {
        throw UnroutableError(instance.origins[i].id, instance.airports[j].id);
      }
    }
  }

  const auto y_name = [&](std::size_t k) {
    return fmt::format("y_{}", instance.origins[k].id);
  };
  const auto x_name = [&](std::size_t i, std::size_t j, std::size_t k) {
    return fmt::format("x_{}_{}_{}", instance.origins[i].id,
                       instance.airports[j].id, instance.origins[k].id);
  };
  const auto z_name = [&](std::size_t i, std::size_t j) {
    return fmt::format("z_{}_{}", instance.origins[i].id,
                       instance.airports[j].id);
  };
  const auto pair_row = [&](std::size_t i, std::size_t j) {
    return fmt::format("r_{}_{}", instance.origins[i].id,
                       instance.airports[j].id);
  };
  const auto open_row = [&](std::size_t i, std::size_t j, std::size_t k) {
    return fmt::format("o_{}_{}_{}", instance.origins[i].id,
                       instance.airports[j].id, instance.origins[k].id);
  };

  std::string out;
  out.reserve(512 + n * jc * (n + 2) * 48);

  fmt::format_to(std::back_inserter(out), "NAME          {}\n", problem_name);

  out += "ROWS\n";
  out += " N  COST\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      fmt::format_to(std::back_inserter(out), " E  {}\n", pair_row(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        fmt::format_to(std::back_inserter(out), " L  {}\n", open_row(i, j, k));
      }
    }
  }
  out += " E  card\n";

  out += "COLUMNS\n";
  out += "    MARKER    'MARKER'                 'INTORG'\n";
  for (std::size_t k = 0; k < n; ++k) {
    entry(out, y_name(k), "card", 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < jc; ++j) {
        entry(out, y_name(k), open_row(i, j, k), -1.0);
      }
    }
  }
  std::vector<std::string> fixed_zero;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::string name = x_name(i, j, k);
        const double d = static_cast<double>(instance.demand(i, j));
        if (instance.has_ground_to_origin(i, k)) {
          const double unit = scenario.beta * instance.ground_to_origin(i, k) +
                              scenario.alpha + instance.aerial(k, j);
          if (d > 0.0 && unit != 0.0) entry(out, name, "COST", d * unit);
        } else if (d > 0.0) {
          fixed_zero.push_back(name);
        }
        entry(out, name, pair_row(i, j), 1.0);
        entry(out, name, open_row(i, j, k), 1.0);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      const std::string name = z_name(i, j);
      const double d = static_cast<double>(instance.demand(i, j));
      if (d > 0.0 && instance.has_ground_to_airport(i, j)) {
        const double unit = scenario.beta * instance.ground_to_airport(i, j);
        if (unit != 0.0) entry(out, name, "COST", d * unit);
      }
      entry(out, name, pair_row(i, j), 1.0);
    }
  }
  out += "    MARKER    'MARKER'                 'INTEND'\n";

  out += "RHS\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      entry(out, "RHS", pair_row(i, j), 1.0);
    }
  }
  entry(out, "RHS", "card", static_cast<double>(scenario.p));

  out += "BOUNDS\n";
  std::size_t fixed_pos = 0;
  const auto bound = [&](const std::string& name) {
    if (fixed_pos < fixed_zero.size() && fixed_zero[fixed_pos] == name) {
      fmt::format_to(std::back_inserter(out), " FX BND       {:<9} 0\n", name);
      ++fixed_pos;
    } else {
      fmt::format_to(std::back_inserter(out), " BV BND       {}\n", name);
    }
  };
  for (std::size_t k = 0; k < n; ++k) bound(y_name(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      for (std::size_t k = 0; k < n; ++k) bound(x_name(i, j, k));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) bound(z_name(i, j));
  }

  out += "ENDATA\n";
  return out;
}

}  // namespace skyport

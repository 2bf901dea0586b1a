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

#ifndef SKYPORT_MODEL_HPP_
#define SKYPORT_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skyport {

// One taxi zone. Airports are zones flagged as destinations; candidate hub
// locations are the non-airport zones.
struct Zone {
  int id = 0;
  std::string name;
  double lat = 0.0;
  double lon = 0.0;
  bool is_airport = false;

  friend bool operator==(const Zone&, const Zone&) = default;
};

// Dense minutes matrix where NaN marks an absent entry. Absent means "no
// observed data", which is distinct from a zero cost.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows),
        cols_(cols),
        data_(rows * cols, std::numeric_limits<double>::quiet_NaN()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  bool has(std::size_t r, std::size_t c) const {
    return !std::isnan(data_[r * cols_ + c]);
  }

  friend bool equal_with_absent(const CostMatrix& a, const CostMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      const bool na = std::isnan(a.data_[i]), nb = std::isnan(b.data_[i]);
      if (na != nb) return false;
      if (!na && a.data_[i] != b.data_[i]) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Dense integer matrix (trip counts).
class DemandMatrix {
 public:
  DemandMatrix() = default;
  DemandMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  std::int64_t row_total(std::size_t r) const {
    std::int64_t t = 0;
    for (std::size_t c = 0; c < cols_; ++c) t += (*this)(r, c);
    return t;
  }

  friend bool operator==(const DemandMatrix&, const DemandMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Immutable problem data. Rows of ground_cost are origins; its columns are
// the origins (0..N-1, housing c_ik) followed by the airports (N..N+J-1,
// housing c_ij). aerial_cost and demand are N x J, indexed the same way.
struct ProblemInstance {
  std::vector<Zone> origins;   // candidate set, size N
  std::vector<Zone> airports;  // destination set, size >= 1
  CostMatrix ground_cost;      // N x (N + J) minutes, NaN = absent
  CostMatrix aerial_cost;      // N x J minutes
  DemandMatrix demand;         // N x J trips

  std::size_t origin_count() const { return origins.size(); }
  std::size_t airport_count() const { return airports.size(); }

  // c_ik: ground minutes from origin i to candidate hub k.
  double ground_to_origin(std::size_t i, std::size_t k) const {
    return ground_cost(i, k);
  }
  bool has_ground_to_origin(std::size_t i, std::size_t k) const {
    return ground_cost.has(i, k);
  }
  // c_ij: ground minutes from origin i to airport j.
  double ground_to_airport(std::size_t i, std::size_t j) const {
    return ground_cost(i, origins.size() + j);
  }
  bool has_ground_to_airport(std::size_t i, std::size_t j) const {
    return ground_cost.has(i, origins.size() + j);
  }
  // c_kj: aerial minutes from candidate hub k to airport j.
  double aerial(std::size_t k, std::size_t j) const {
    return aerial_cost(k, j);
  }

  std::optional<std::size_t> origin_index(int zone_id) const;
  std::optional<std::size_t> airport_index(int zone_id) const;
};

enum class AllocationMode { kPerPair, kSinglePerOrigin };
enum class TieBreak { kDirectThenLowestId };

// One sensitivity scenario: transfer time alpha (minutes per hub-routed
// trip), ground congestion factor beta (multiplier on every ground leg),
// and the number of hubs to open.
struct Scenario {
  double alpha = 0.0;
  double beta = 1.0;
  int p = 0;
  AllocationMode allocation_mode = AllocationMode::kPerPair;
  TieBreak tie_break = TieBreak::kDirectThenLowestId;
};

enum class RouteKind { kDirect, kViaHub };

// Per-unit-demand routing decision for one (origin, airport) pair.
//   kDirect: cost = beta * c_ij
//   kViaHub: cost = beta * c_ik + alpha + c_kj for the stored hub k
struct Route {
  RouteKind kind = RouteKind::kDirect;
  std::optional<int> hub;  // zone id, present iff kViaHub
  double cost = 0.0;

  friend bool operator==(const Route&, const Route&) = default;
};

struct PairRoute {
  int origin = 0;   // zone id
  int airport = 0;  // zone id
  Route route;

  friend bool operator==(const PairRoute&, const PairRoute&) = default;
};

struct SolveMeta {
  std::string solver;
  std::int64_t iterations = 0;
  double wall_time_seconds = 0.0;
  bool proven = false;
  std::optional<double> gap;  // relative bound gap when known

  friend bool operator==(const SolveMeta&, const SolveMeta&) = default;
};

// A selected hub set plus the realized routing of every pair with positive
// demand. `objective` is vehicle-minutes and is recomputable from routing.
struct HubSolution {
  std::vector<int> hubs;              // sorted zone ids, |hubs| = p
  std::vector<PairRoute> routing;     // sorted by (origin id, airport id)
  double objective = 0.0;
  int direct_count = 0;
  SolveMeta meta;
};

// Thrown when a positive-demand pair has no usable route.
class UnroutableError : public std::runtime_error {
 public:
  UnroutableError(int origin_id, int airport_id)
      : std::runtime_error("unroutable demand pair (origin " +
                           std::to_string(origin_id) + ", airport " +
                           std::to_string(airport_id) + ")"),
        origin(origin_id),
        airport(airport_id) {}
  int origin;
  int airport;
};

// Report-style invariant checks; empty result means well-formed.
std::vector<std::string> validate(const ProblemInstance& instance);
std::vector<std::string> validate(const Scenario& scenario,
                                  std::size_t candidate_count);

// Throws std::invalid_argument listing every violation.
void ensure_valid(const ProblemInstance& instance);
void ensure_valid(const Scenario& scenario, std::size_t candidate_count);

// Deterministic pairwise-summation reduction (bounds floating error and is
// independent of evaluation parallelism).
double pairwise_sum(std::span<const double> values);

// Sum of d_ij * routing cost over the solution's pairs; must match the
// stored objective to 1e-9 relative.
double recompute_objective(const HubSolution& solution,
                           const ProblemInstance& instance);

}  // namespace skyport

#endif  // SKYPORT_MODEL_HPP_

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

// Post-optimization analytics: hourly arrival profiles at hubs, M/M/c
// steady-state wait times, the largest arrival rate meeting a wait-time
// target, and market penetration.

#ifndef SKYPORT_QUEUEING_HPP_
#define SKYPORT_QUEUEING_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "skyport/ingest.hpp"
#include "skyport/model.hpp"

namespace skyport {

// Average incoming hub arrivals per hour of day, across the dataset's days.
struct DemandProfile {
  int hub = 0;  // zone id
  std::array<double, 24> hourly{};
  double peak = 0.0;  // lambda_k = max over the 24 values
};

struct ProfileStats {
  std::int64_t trips_bucketed = 0;
  std::int64_t skipped_pruned_zone = 0;  // origin not in the instance
  std::int64_t skipped_unrouted = 0;     // pair absent from the solution
};

struct QueueSpec {
  int servers = 12;             // c
  double service_rate = 2.5;    // mu, vehicles/hour
  double wait_target = 5.0 / 60.0;  // hours
};

struct ErlangMetrics {
  double p0 = 0.0;  // probability of an empty system
  double lq = 0.0;  // mean queue length
  double wq = 0.0;  // mean wait in queue, hours
};

struct ToleranceResult {
  double lambda = 0.0;            // exact root of Wq(lambda) = target
  std::int64_t lambda_floor = 0;  // integer rate used in the paper tables
};

struct PenetrationReport {
  double lambda_tol = 0.0;
  double lambda_max = 0.0;
  double penetration = 0.0;  // lambda_tol / lambda_max (may exceed 1)
};

// Buckets each VIA_HUB trip at pickup_time + access minutes (the scenario's
// beta-scaled ground cost to the hub by default), by hour of day, averaged
// over the distinct calendar days present in `trips`. Every solution hub
// gets a profile, including hubs with no assigned trips. Trips are expected
// to be duration-filtered already (see filter_by_duration).
std::vector<DemandProfile> hub_arrival_profiles(
    const HubSolution& solution, std::span<const TripRecord> trips,
    const Scenario& scenario, const ProblemInstance& instance,
    bool scale_access_by_beta = true, ProfileStats* stats = nullptr);

// Max peak across hubs (lambda_p^max). Throws on an empty profile set.
double lambda_max(std::span<const DemandProfile> profiles);

// M/M/c steady state. Requires 0 <= lambda < c * mu; throws on instability.
ErlangMetrics erlang_metrics(double lambda, const QueueSpec& spec);

// The unique lambda in (0, c*mu) with Wq(lambda) = wait_target, by
// bisection to 1e-9 absolute. wait_target = 0 yields 0.
ToleranceResult lambda_tolerable(const QueueSpec& spec);

// lambda_tol / lambda_max. Throws std::invalid_argument when lambda_max
// is zero (full coverage).
PenetrationReport market_penetration(double lambda_tol, double lambda_max);

// Round trip plus loading at both ends: mu = 60 / (2 * max_aerial + 2 * load).
double service_rate_from_times(double max_aerial_minutes,
                               double load_unload_minutes_per_end);

}  // namespace skyport

#endif  // SKYPORT_QUEUEING_HPP_

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

#include "skyport/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace skyport {

std::vector<DemandProfile> hub_arrival_profiles(
    const HubSolution& solution, std::span<const TripRecord> trips,
    const Scenario& scenario, const ProblemInstance& instance,
    bool scale_access_by_beta, ProfileStats* stats) {
  // (origin id, airport id) -> hub zone id for VIA_HUB pairs.
  std::map<std::pair<int, int>, int> via_pairs;
  std::set<std::pair<int, int>> known_pairs;
  for (const PairRoute& pr : solution.routing) {
    known_pairs.insert({pr.origin, pr.airport});
    if (pr.route.kind == RouteKind::kViaHub) {
      via_pairs[{pr.origin, pr.airport}] = *pr.route.hub;
    }
  }

  std::map<int, std::array<std::int64_t, 24>> buckets;
  for (int hub : solution.hubs) buckets[hub] = {};

  std::set<int> airport_ids;
  for (const Zone& z : instance.airports) airport_ids.insert(z.id);

  std::set<std::int64_t> days;
  ProfileStats local;
  for (const TripRecord& t : trips) {
    days.insert(day_number(t.pickup_time));
    if (airport_ids.count(t.dest_zone) == 0) continue;
    const auto oi = instance.origin_index(t.origin_zone);
    if (!oi) {
      ++local.skipped_pruned_zone;
      continue;
    }
    if (known_pairs.count({t.origin_zone, t.dest_zone}) == 0) {
      ++local.skipped_unrouted;
      continue;
    }
    const auto via = via_pairs.find({t.origin_zone, t.dest_zone});
    if (via == via_pairs.end()) continue;  // direct pair, no hub arrival
    const int hub = via->second;
    const auto ki = instance.origin_index(hub);
    const double access = instance.ground_to_origin(*oi, *ki);
    const double minutes =
        scale_access_by_beta ? scenario.beta * access : access;
    const auto arrival =
        t.pickup_time + static_cast<std::int64_t>(std::llround(minutes * 60.0));
    ++buckets[hub][hour_of_day(arrival)];
    ++local.trips_bucketed;
  }

  const double day_count = days.empty() ? 1.0 : static_cast<double>(days.size());
  std::vector<DemandProfile> profiles;
  profiles.reserve(buckets.size());
  for (const auto& [hub, counts] : buckets) {
    DemandProfile profile;
    profile.hub = hub;
    for (int h = 0; h < 24; ++h) {
      profile.hourly[h] = static_cast<double>(counts[h]) / day_count;
    }
    profile.peak = *std::max_element(profile.hourly.begin(),
                                     profile.hourly.end());
    profiles.push_back(profile);
  }
  if (stats) *stats = local;
  return profiles;
}

double lambda_max(std::span<const DemandProfile> profiles) {
  if (profiles.empty()) {
    throw std::invalid_argument("lambda_max of an empty profile set");
  }
  double best = 0.0;
  for (const DemandProfile& p : profiles) best = std::max(best, p.peak);
  return best;
}

ErlangMetrics erlang_metrics(double lambda, const QueueSpec& spec) {
  if (spec.servers < 1) throw std::invalid_argument("servers must be >= 1");
  if (!(spec.service_rate > 0.0)) {
    throw std::invalid_argument("service rate must be positive");
  }
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  const int c = spec.servers;
  const double mu = spec.service_rate;
  if (lambda >= c * mu) {
    throw std::invalid_argument("unstable queue: lambda >= c * mu");
  }

  ErlangMetrics m;
  if (lambda == 0.0) {
    m.p0 = 1.0;
    return m;
  }

  const double a = lambda / mu;          // offered load
  const double rho = lambda / (c * mu);  // utilization

  // term_n = a^n / n!, accumulated incrementally for stability.
  double term = 1.0;
  double sum = 1.0;  // n = 0
  for (int nn = 1; nn < c; ++nn) {
    term *= a / nn;
    sum += term;
  }
  const double term_c = term * a / c;  // a^c / c!
  m.p0 = 1.0 / (sum + term_c / (1.0 - rho));
  m.lq = m.p0 * term_c * rho / ((1.0 - rho) * (1.0 - rho));
  m.wq = m.lq / lambda;
  return m;
}

ToleranceResult lambda_tolerable(const QueueSpec& spec) {
  if (spec.wait_target < 0.0) {
    throw std::invalid_argument("wait target must be >= 0");
  }
  ToleranceResult result;
  if (spec.wait_target == 0.0) return result;

  const double cap = spec.servers * spec.service_rate;
  double lo = 0.0;
  double hi = cap;
  // Wq is continuous, strictly increasing on (0, c*mu), 0 at 0+ and
  // unbounded at the stability limit, so the root is unique.
  for (int iter = 0; iter < 200 && hi - lo > 1e-9; ++iter) {
    const double mid = (lo + hi) / 2.0;
    double wq;
    if (mid >= cap) {
      wq = std::numeric_limits<double>::infinity();
    } else {
      wq = erlang_metrics(mid, spec).wq;
    }
    if (wq < spec.wait_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.lambda = lo;
  result.lambda_floor = static_cast<std::int64_t>(std::floor(lo));
  return result;
}

PenetrationReport market_penetration(double lambda_tol, double lambda_max) {
  if (!(lambda_max > 0.0)) {
    throw std::invalid_argument(
        "market penetration undefined: lambda_max is zero (full coverage)");
  }
  PenetrationReport report;
  report.lambda_tol = lambda_tol;
  report.lambda_max = lambda_max;
  report.penetration = lambda_tol / lambda_max;
  return report;
}

double service_rate_from_times(double max_aerial_minutes,
                               double load_unload_minutes_per_end) {
  const double service_minutes =
      2.0 * max_aerial_minutes + 2.0 * load_unload_minutes_per_end;
  if (!(service_minutes > 0.0)) {
    throw std::invalid_argument("service time must be positive");
  }
  return 60.0 / service_minutes;
}

}  // namespace skyport

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

#include <doctest.h>

#include <random>
#include <set>

#include "skyport/allocation.hpp"
#include "skyport/queueing.hpp"
#include "test_support.hpp"

using namespace skyport;

namespace {

// Fixture solution: pair (1 -> 100) via hub 2, pair (2 -> 100) direct.
struct ProfileFixture {
  ProblemInstance instance = test::two_origin_fixture();
  Scenario scenario;
  HubSolution solution;

  ProfileFixture() {
    const std::vector<std::size_t> hubs = {1};
    solution = make_solution(hubs, evaluate_hub_set(hubs, scenario, instance),
                             scenario, instance);
  }
};

TripRecord trip_at(int origin, int dest, int day, int hour, int minute) {
  TripRecord t;
  t.pickup_time = (17532 + day) * 86400LL + hour * 3600 + minute * 60;
  t.dropoff_time = t.pickup_time + 1800;
  t.origin_zone = origin;
  t.dest_zone = dest;
  return t;
}

}  // namespace

TEST_CASE("a hub arrival lands in the pickup-plus-access-time bucket") {
  ProfileFixture fx;
  // Access 1 -> 2 is 15 ground minutes; 08:10 + 15 min arrives hour 8.
  const std::vector<TripRecord> trips = {trip_at(1, 100, 0, 8, 10)};
  const auto profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                             fx.instance);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].hub == 2);
  CHECK(profiles[0].hourly[8] == 1.0);
  CHECK(profiles[0].peak == 1.0);
}

TEST_CASE("arrivals crossing the hour boundary bucket together") {
  ProfileFixture fx;
  // 08:50 + 15 -> 09:05 and 08:46 + 15 -> 09:01: both hour 9, one day.
  const std::vector<TripRecord> trips = {trip_at(1, 100, 0, 8, 50),
                                         trip_at(1, 100, 0, 8, 46)};
  const auto profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                             fx.instance);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].hourly[9] == 2.0);
  CHECK(profiles[0].hourly[8] == 0.0);
}

TEST_CASE("hourly values average over distinct calendar days") {
  ProfileFixture fx;
  const std::vector<TripRecord> trips = {
      trip_at(1, 100, 0, 8, 10), trip_at(1, 100, 1, 8, 20),
      trip_at(2, 100, 1, 9, 0),  // direct pair adds a day but no arrival
  };
  const auto profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                             fx.instance);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].hourly[8] == 1.0);  // 2 arrivals / 2 days
}

TEST_CASE("beta scales the access time when enabled") {
  ProfileFixture fx;
  fx.scenario.beta = 4.0;  // the 15 min leg becomes 60
  const std::vector<TripRecord> trips = {trip_at(1, 100, 0, 8, 10)};
  auto profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                       fx.instance, true);
  CHECK(profiles[0].hourly[9] == 1.0);  // 08:10 + 60 min
  profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                  fx.instance, false);
  CHECK(profiles[0].hourly[9] == 0.0);
  CHECK(profiles[0].hourly[8] == 1.0);  // 08:10 + 15 min
}

TEST_CASE("trips from pruned zones are skipped and counted") {
  ProfileFixture fx;
  const std::vector<TripRecord> trips = {trip_at(1, 100, 0, 8, 10),
                                         trip_at(999, 100, 0, 9, 0)};
  ProfileStats stats;
  const auto profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                             fx.instance, true, &stats);
  CHECK(profiles[0].hourly[8] == 1.0);
  CHECK(stats.skipped_pruned_zone == 1);
  CHECK(stats.trips_bucketed == 1);
}

TEST_CASE("bucketed arrivals are conserved") {
  ProfileFixture fx;
  std::mt19937_64 rng(167);
  std::vector<TripRecord> trips;
  std::int64_t via_trips = 0;
  for (int t = 0; t < 500; ++t) {
    const int origin = rng() % 2 == 0 ? 1 : 2;
    if (origin == 1) ++via_trips;  // pair (1, 100) routes via the hub
    trips.push_back(trip_at(origin, 100, static_cast<int>(rng() % 7),
                            static_cast<int>(rng() % 24),
                            static_cast<int>(rng() % 60)));
  }
  std::set<std::int64_t> days;
  for (const TripRecord& t : trips) days.insert(day_number(t.pickup_time));
  const auto profiles = hub_arrival_profiles(fx.solution, trips, fx.scenario,
                                             fx.instance);
  double bucket_sum = 0.0;
  for (double v : profiles[0].hourly) bucket_sum += v;
  CHECK(bucket_sum * static_cast<double>(days.size()) ==
        doctest::Approx(static_cast<double>(via_trips)).epsilon(1e-9));
}

TEST_CASE("lambda_max is the max peak across hubs") {
  std::vector<DemandProfile> profiles(6);
  const double peaks[] = {272, 281, 269, 281, 243, 262};
  for (int i = 0; i < 6; ++i) {
    profiles[i].hub = i + 1;
    profiles[i].hourly[7] = peaks[i];
    profiles[i].peak = peaks[i];
  }
  CHECK(lambda_max(profiles) == 281.0);

  profiles.resize(1);
  profiles[0].peak = 910.0;
  CHECK(lambda_max(profiles) == 910.0);

  profiles[0] = DemandProfile{};
  CHECK(lambda_max(profiles) == 0.0);  // all-zero profiles

  profiles.clear();
  CHECK_THROWS_AS((void)lambda_max(profiles), std::invalid_argument);
}

TEST_CASE("erlang metrics at the edges") {
  QueueSpec spec;
  spec.servers = 12;
  spec.service_rate = 2.5;
  const ErlangMetrics at_zero = erlang_metrics(0.0, spec);
  CHECK(at_zero.wq == 0.0);
  CHECK(at_zero.p0 == 1.0);
  CHECK_THROWS_AS((void)erlang_metrics(30.0, spec), std::invalid_argument);
  CHECK_THROWS_AS((void)erlang_metrics(31.0, spec), std::invalid_argument);
}

TEST_CASE("single-server metrics match the M/M/1 closed forms") {
  QueueSpec spec;
  spec.servers = 1;
  SUBCASE("the spec example") {
    spec.service_rate = 2.0;
    CHECK(erlang_metrics(1.0, spec).wq == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("a grid of rates") {
    for (int li = 1; li <= 10; ++li) {
      for (int mi = 1; mi <= 10; ++mi) {
        const double mu = 0.5 * mi + 1.0;
        const double lambda = (0.09 * li) * mu;  // keep under capacity
        spec.service_rate = mu;
        const ErlangMetrics m = erlang_metrics(lambda, spec);
        const double rho = lambda / mu;
        CHECK(m.p0 == doctest::Approx(1.0 - rho).epsilon(1e-9));
        CHECK(m.lq ==
              doctest::Approx(rho * rho / (1.0 - rho)).epsilon(1e-9));
        CHECK(m.wq ==
              doctest::Approx(lambda / (mu * (mu - lambda))).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("wait time grows with load and shrinks with servers") {
  QueueSpec spec;
  spec.servers = 12;
  spec.service_rate = 2.5;
  double prev = 0.0;
  for (double lambda = 2.0; lambda < 30.0; lambda += 2.0) {
    const double wq = erlang_metrics(lambda, spec).wq;
    CHECK(wq > prev);
    prev = wq;
  }
  QueueSpec more = spec;
  more.servers = 13;
  CHECK(erlang_metrics(24.0, more).wq < erlang_metrics(24.0, spec).wq);
}

TEST_CASE("steady-state probabilities implied by P0 sum to one") {
  QueueSpec spec;
  spec.servers = 12;
  spec.service_rate = 2.5;
  for (double lambda : {1.0, 12.0, 24.0, 29.0}) {
    const ErlangMetrics m = erlang_metrics(lambda, spec);
    const double a = lambda / spec.service_rate;
    double term = m.p0;
    double sum = term;
    for (int n = 1; n < 2000; ++n) {
      const int servers_busy = std::min(n, spec.servers);
      term *= a / servers_busy;
      sum += term;
      if (term < 1e-12) break;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("the tolerable arrival rate matches the wait-time target") {
  QueueSpec spec;
  SUBCASE("the paper operating point floors to 24") {
    spec.servers = 12;
    spec.service_rate = 2.5;
    spec.wait_target = 5.0 / 60.0;
    const ToleranceResult tol = lambda_tolerable(spec);
    CHECK(tol.lambda_floor == 24);
    CHECK(erlang_metrics(24.0, spec).wq <= 5.0 / 60.0);
    CHECK(erlang_metrics(25.0, spec).wq > 5.0 / 60.0);
    CHECK(erlang_metrics(tol.lambda, spec).wq ==
          doctest::Approx(5.0 / 60.0).epsilon(1e-6));
  }
  SUBCASE("inverting the M/M/1 closed form") {
    spec.servers = 1;
    spec.service_rate = 2.0;
    spec.wait_target = 0.5;
    CHECK(lambda_tolerable(spec).lambda == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("an enormous target approaches the stability limit") {
    spec.servers = 12;
    spec.service_rate = 2.5;
    spec.wait_target = 1e9;
    CHECK(lambda_tolerable(spec).lambda == doctest::Approx(30.0).epsilon(1e-6));
  }
  SUBCASE("a zero target tolerates nothing") {
    spec.wait_target = 0.0;
    CHECK(lambda_tolerable(spec).lambda == 0.0);
  }
}

TEST_CASE("market penetration ratios reproduce the reference cells") {
  const PenetrationReport a = market_penetration(24.0, 910.0);
  CHECK(a.penetration * 100.0 == doctest::Approx(2.64).epsilon(0.002));
  const PenetrationReport b = market_penetration(24.0, 192.0);
  CHECK(b.penetration * 100.0 == doctest::Approx(12.50).epsilon(1e-9));
  const PenetrationReport c = market_penetration(24.0, 24.0);
  CHECK(c.penetration == 1.0);
  CHECK_THROWS_AS((void)market_penetration(24.0, 0.0), std::invalid_argument);
}

TEST_CASE("service rate from round-trip times") {
  CHECK(service_rate_from_times(10.22, 2.0) ==
        doctest::Approx(60.0 / 24.44).epsilon(1e-12));
  CHECK(service_rate_from_times(13.0, 2.0) == 2.0);
  CHECK(service_rate_from_times(0.0, 15.0) == 2.0);
}

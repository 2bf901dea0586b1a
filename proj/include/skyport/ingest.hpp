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

// Trip-record ingestion: raw trips CSV + zone geometry -> ProblemInstance.

#ifndef SKYPORT_INGEST_HPP_
#define SKYPORT_INGEST_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skyport/model.hpp"

namespace skyport {

// One ground trip. Timestamps are naive local seconds since the epoch.
struct TripRecord {
  std::int64_t pickup_time = 0;
  std::int64_t dropoff_time = 0;
  int origin_zone = 0;
  int dest_zone = 0;

  double duration_minutes() const {
    return static_cast<double>(dropoff_time - pickup_time) / 60.0;
  }
};

struct IngestConfig {
  double airspeed_mph = 150.0;
  double load_unload_minutes = 2.0;  // per end; used by queue analytics
  double min_trip_minutes = 1.0;
  double max_trip_minutes = 300.0;
  std::optional<std::size_t> prune_keep;  // zones to retain (default: all)
  std::optional<double> prune_quantile;   // fraction retained, rounded up
};

struct ParseStats {
  std::int64_t rows = 0;  // data rows seen (header excluded)
  std::int64_t malformed = 0;
  std::int64_t negative_duration = 0;
};

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// "YYYY-MM-DD HH:MM:SS" -> naive epoch seconds.
std::optional<std::int64_t> parse_timestamp(std::string_view text);
int hour_of_day(std::int64_t epoch_seconds);
std::int64_t day_number(std::int64_t epoch_seconds);

// Comma-separated rows with a header naming pickup_datetime,
// dropoff_datetime, PULocationID, DOLocationID (case-insensitive).
// Malformed rows are counted and skipped; rows with dropoff before pickup
// are counted under negative_duration. Throws FormatError when a required
// column is missing.
std::vector<TripRecord> parse_trips(std::istream& in, ParseStats& stats);

// zones CSV: zone_id,name,lat,lon,is_airport. Throws FormatError on any
// malformed row (the zones file is small and curated).
std::vector<Zone> parse_zones(std::istream& in);

// Trips whose duration lies in [min_trip_minutes, max_trip_minutes].
std::vector<TripRecord> filter_by_duration(std::span<const TripRecord> trips,
                                           const IngestConfig& config,
                                           std::int64_t* filtered_out = nullptr);

// Mean retained duration per ordered (origin id, dest id) pair; pairs with
// no retained trips are absent.
using PairMeans = std::map<std::pair<int, int>, double>;
PairMeans build_ground_costs(std::span<const TripRecord> trips,
                             const IngestConfig& config);

// d_ij = count of retained trips from origin i to airport j. Trips to
// non-airport destinations contribute only to ground costs.
DemandMatrix build_demand(std::span<const TripRecord> trips,
                          std::span<const Zone> origins,
                          std::span<const Zone> airports,
                          const IngestConfig& config);

// Straight-line flight minutes between two zones: planar Euclidean distance
// after an equirectangular projection about the mean latitude, at constant
// airspeed. Throws std::invalid_argument when a coordinate is missing (NaN).
double aerial_cost(const Zone& from, const Zone& to, double airspeed_mph);

// Indices of the `keep` origins with the highest total airport demand
// (ties to the lower zone id), returned in ascending index order.
// keep > available clamps (reported via `clamped`).
std::vector<std::size_t> prune_zones(const DemandMatrix& demand,
                                     std::span<const Zone> origins,
                                     std::size_t keep,
                                     bool* clamped = nullptr);

struct IngestStats {
  std::int64_t rows = 0;
  std::int64_t malformed = 0;
  std::int64_t negative_duration = 0;
  std::int64_t duration_filtered = 0;
  std::int64_t trips_retained = 0;
  std::int64_t distinct_days = 0;
  std::int64_t demand_total = 0;
  std::size_t zones_total = 0;
  std::size_t airport_count = 0;
  std::size_t origins_before_prune = 0;
  std::size_t origins_retained = 0;
  bool prune_clamped = false;
};

// Full pipeline: parse -> filter -> cost/demand matrices -> prune ->
// validated ProblemInstance. Zones flagged is_airport become the
// destination set; the remaining zones are the candidate origins.
ProblemInstance build_instance(std::span<const TripRecord> trips,
                               std::span<const Zone> zones,
                               const IngestConfig& config,
                               IngestStats* stats = nullptr);

}  // namespace skyport

#endif  // SKYPORT_INGEST_HPP_

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

#include "skyport/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <set>

namespace skyport {

namespace {

constexpr double kEarthRadiusMiles = 3958.8;
constexpr double kPi = 3.14159265358979323846;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (std::isspace(static_cast<unsigned char>(s[b])) != 0)) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) != 0)) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(
        trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return static_cast<int>(v);
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

// Howard Hinnant's civil-from-days inverse: serial day count for a civil
// date, proleptic Gregorian, day 0 = 1970-01-01.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

unsigned days_in_month(int y, unsigned m) {
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30,
                                       31, 31, 30, 31, 30, 31};
  if (m == 2 && ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)) return 29;
  return kDays[m - 1];
}

std::size_t find_column(const std::vector<std::string>& header,
                        std::string_view name) {
  const std::string want = lower(std::string(name));
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (lower(header[i]) == want) return i;
  }
  throw FormatError("missing required column: " + std::string(name));
}

std::string strip_bom(std::string s) {
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
      static_cast<unsigned char>(s[1]) == 0xBB &&
      static_cast<unsigned char>(s[2]) == 0xBF) {
    return s.substr(3);
  }
  return s;
}

}  // namespace

std::optional<std::int64_t> parse_timestamp(std::string_view text) {
  int y = 0;
  unsigned mo = 0, da = 0, h = 0, mi = 0, se = 0;
  const std::string s(text);
  if (std::sscanf(s.c_str(), "%d-%u-%u %u:%u:%u", &y, &mo, &da, &h, &mi,
                  &se) != 6) {
    return std::nullopt;
  }
  if (mo < 1 || mo > 12 || da < 1 || da > days_in_month(y, mo) || h > 23 ||
      mi > 59 || se > 59) {
    return std::nullopt;
  }
  return days_from_civil(y, mo, da) * 86400 + h * 3600 + mi * 60 + se;
}

int hour_of_day(std::int64_t epoch_seconds) {
  const std::int64_t sec = ((epoch_seconds % 86400) + 86400) % 86400;
  return static_cast<int>(sec / 3600);
}

std::int64_t day_number(std::int64_t epoch_seconds) {
  std::int64_t d = epoch_seconds / 86400;
  if (epoch_seconds % 86400 < 0) --d;
  return d;
}

std::vector<TripRecord> parse_trips(std::istream& in, ParseStats& stats) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("trips input is empty (no header row)");
  }
  const auto header = split_csv(strip_bom(line));
  const std::size_t pickup_col = find_column(header, "pickup_datetime");
  const std::size_t dropoff_col = find_column(header, "dropoff_datetime");
  const std::size_t pu_col = find_column(header, "PULocationID");
  const std::size_t do_col = find_column(header, "DOLocationID");
  const std::size_t needed =
      std::max({pickup_col, dropoff_col, pu_col, do_col}) + 1;

  std::vector<TripRecord> trips;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++stats.rows;
    const auto fields = split_csv(line);
    if (fields.size() < needed) {
      ++stats.malformed;
      continue;
    }
    const auto pickup = parse_timestamp(fields[pickup_col]);
    const auto dropoff = parse_timestamp(fields[dropoff_col]);
    const auto pu = parse_int(fields[pu_col]);
    const auto dout = parse_int(fields[do_col]);
    if (!pickup || !dropoff || !pu || !dout) {
      ++stats.malformed;
      continue;
    }
    if (*dropoff < *pickup) {
      ++stats.negative_duration;
      continue;
    }
    trips.push_back(TripRecord{*pickup, *dropoff, *pu, *dout});
  }
  if (in.bad()) throw std::runtime_error("trips input: read error");
  return trips;
}

std::vector<Zone> parse_zones(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("zones input is empty (no header row)");
  }
  const auto header = split_csv(strip_bom(line));
  const std::size_t id_col = find_column(header, "zone_id");
  const std::size_t name_col = find_column(header, "name");
  const std::size_t lat_col = find_column(header, "lat");
  const std::size_t lon_col = find_column(header, "lon");
  const std::size_t airport_col = find_column(header, "is_airport");
  const std::size_t needed =
      std::max({id_col, name_col, lat_col, lon_col, airport_col}) + 1;

  std::vector<Zone> zones;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() < needed) {
      throw FormatError("zones row " + std::to_string(row) +
                        ": too few fields");
    }
    Zone z;
    const auto id = parse_int(fields[id_col]);
    const auto lat = parse_double(fields[lat_col]);
    const auto lon = parse_double(fields[lon_col]);
    if (!id || !lat || !lon) {
      throw FormatError("zones row " + std::to_string(row) +
                        ": unparsable field");
    }
    z.id = *id;
    z.name = fields[name_col];
    z.lat = *lat;
    z.lon = *lon;
    const std::string flag = lower(fields[airport_col]);
    if (flag == "1" || flag == "true" || flag == "yes") {
      z.is_airport = true;
    } else if (flag == "0" || flag == "false" || flag == "no") {
      z.is_airport = false;
    } else {
      throw FormatError("zones row " + std::to_string(row) +
                        ": bad is_airport flag");
    }
    zones.push_back(std::move(z));
  }
  if (in.bad()) throw std::runtime_error("zones input: read error");
  return zones;
}

std::vector<TripRecord> filter_by_duration(std::span<const TripRecord> trips,
                                           const IngestConfig& config,
                                           std::int64_t* filtered_out) {
  std::vector<TripRecord> kept;
  kept.reserve(trips.size());
  std::int64_t dropped = 0;
  for (const TripRecord& t : trips) {
    const double minutes = t.duration_minutes();
    if (minutes < config.min_trip_minutes ||
        minutes > config.max_trip_minutes) {
      ++dropped;
      continue;
    }
    kept.push_back(t);
  }
  if (filtered_out) *filtered_out = dropped;
  return kept;
}

PairMeans build_ground_costs(std::span<const TripRecord> trips,
                             const IngestConfig& config) {
  std::map<std::pair<int, int>, std::pair<double, std::int64_t>> acc;
  for (const TripRecord& t : trips) {
    const double minutes = t.duration_minutes();
    if (minutes < config.min_trip_minutes ||
        minutes > config.max_trip_minutes) {
      continue;
    }
    auto& slot = acc[{t.origin_zone, t.dest_zone}];
    slot.first += minutes;
    slot.second += 1;
  }
  PairMeans means;
  for (const auto& [pair, slot] : acc) {
    means[pair] = slot.first / static_cast<double>(slot.second);
  }
  return means;
}

DemandMatrix build_demand(std::span<const TripRecord> trips,
                          std::span<const Zone> origins,
                          std::span<const Zone> airports,
                          const IngestConfig& config) {
  std::map<int, std::size_t> origin_of;
  for (std::size_t i = 0; i < origins.size(); ++i) {
    origin_of[origins[i].id] = i;
  }
  std::map<int, std::size_t> airport_of;
  for (std::size_t j = 0; j < airports.size(); ++j) {
    airport_of[airports[j].id] = j;
  }

  DemandMatrix demand(origins.size(), airports.size());
  for (const TripRecord& t : trips) {
    const double minutes = t.duration_minutes();
    if (minutes < config.min_trip_minutes ||
        minutes > config.max_trip_minutes) {
      continue;
    }
    const auto oi = origin_of.find(t.origin_zone);
    const auto aj = airport_of.find(t.dest_zone);
    if (oi == origin_of.end() || aj == airport_of.end()) continue;
    ++demand(oi->second, aj->second);
  }
  return demand;
}

double aerial_cost(const Zone& from, const Zone& to, double airspeed_mph) {
  if (std::isnan(from.lat) || std::isnan(from.lon) || std::isnan(to.lat) ||
      std::isnan(to.lon)) {
    throw std::invalid_argument("zone " +
                                std::to_string(std::isnan(from.lat) ||
                                                       std::isnan(from.lon)
                                                   ? from.id
                                                   : to.id) +
                                ": missing coordinates");
  }
  if (airspeed_mph <= 0.0) {
    throw std::invalid_argument("airspeed must be positive");
  }
  const double mean_lat = (from.lat + to.lat) / 2.0 * kPi / 180.0;
  const double dx =
      kEarthRadiusMiles * std::cos(mean_lat) * (to.lon - from.lon) * kPi / 180.0;
  const double dy = kEarthRadiusMiles * (to.lat - from.lat) * kPi / 180.0;
  const double miles = std::hypot(dx, dy);
  return miles / airspeed_mph * 60.0;
}

std::vector<std::size_t> prune_zones(const DemandMatrix& demand,
                                     std::span<const Zone> origins,
                                     std::size_t keep, bool* clamped) {
  if (clamped) *clamped = false;
  if (keep > origins.size()) {
    keep = origins.size();
    if (clamped) *clamped = true;
  }
  std::vector<std::size_t> ranked(origins.size());
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t a, std::size_t b) {
                     const std::int64_t ta = demand.row_total(a);
                     const std::int64_t tb = demand.row_total(b);
                     if (ta != tb) return ta > tb;
                     return origins[a].id < origins[b].id;
                   });
  ranked.resize(keep);
  std::sort(ranked.begin(), ranked.end());
  return ranked;
}

ProblemInstance build_instance(std::span<const TripRecord> trips,
                               std::span<const Zone> zones,
                               const IngestConfig& config,
                               IngestStats* stats) {
  if (!(config.airspeed_mph > 0.0)) {
    throw std::invalid_argument("airspeed must be positive");
  }
  if (config.min_trip_minutes < 0.0 ||
      config.min_trip_minutes >= config.max_trip_minutes) {
    throw std::invalid_argument(
        "trip duration bounds must satisfy 0 <= min < max");
  }
  std::vector<Zone> origins;
  std::vector<Zone> airports;
  for (const Zone& z : zones) {
    (z.is_airport ? airports : origins).push_back(z);
  }
  const auto by_id = [](const Zone& a, const Zone& b) { return a.id < b.id; };
  std::sort(origins.begin(), origins.end(), by_id);
  std::sort(airports.begin(), airports.end(), by_id);
  if (airports.empty()) throw FormatError("zones define no airport");

  std::int64_t duration_filtered = 0;
  const std::vector<TripRecord> retained =
      filter_by_duration(trips, config, &duration_filtered);

  // Demand over the full origin set drives pruning.
  const DemandMatrix full_demand =
      build_demand(retained, origins, airports, config);
  std::size_t keep = origins.size();
  if (config.prune_keep) {
    keep = *config.prune_keep;
  } else if (config.prune_quantile) {
    const double q = std::clamp(*config.prune_quantile, 0.0, 1.0);
    keep = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(origins.size())));
  }
  bool clamped = false;
  const std::vector<std::size_t> kept_idx =
      prune_zones(full_demand, origins, keep, &clamped);

  ProblemInstance instance;
  instance.airports = airports;
  for (std::size_t idx : kept_idx) instance.origins.push_back(origins[idx]);

  const std::size_t n = instance.origins.size();
  const std::size_t jc = airports.size();
  instance.demand = DemandMatrix(n, jc);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < jc; ++j) {
      instance.demand(i, j) = full_demand(kept_idx[i], j);
    }
  }

  const PairMeans means = build_ground_costs(retained, config);
  instance.ground_cost = CostMatrix(n, n + jc);
  for (std::size_t i = 0; i < n; ++i) {
    const int from = instance.origins[i].id;
    for (std::size_t k = 0; k < n; ++k) {
      const auto it = means.find({from, instance.origins[k].id});
      if (it != means.end()) instance.ground_cost(i, k) = it->second;
    }
    // A hub in the trip's own zone has no ground access leg.
    instance.ground_cost(i, i) = 0.0;
    for (std::size_t j = 0; j < jc; ++j) {
      const auto it = means.find({from, airports[j].id});
      if (it != means.end()) instance.ground_cost(i, n + j) = it->second;
    }
  }

  instance.aerial_cost = CostMatrix(n, jc);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < jc; ++j) {
      instance.aerial_cost(k, j) =
          aerial_cost(instance.origins[k], airports[j], config.airspeed_mph);
    }
  }

  if (stats) {
    stats->duration_filtered = duration_filtered;
    stats->trips_retained = static_cast<std::int64_t>(retained.size());
    std::set<std::int64_t> days;
    for (const TripRecord& t : retained) days.insert(day_number(t.pickup_time));
    stats->distinct_days = static_cast<std::int64_t>(days.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += instance.demand.row_total(i);
    }
    stats->demand_total = total;
    stats->zones_total = zones.size();
    stats->airport_count = airports.size();
    stats->origins_before_prune = origins.size();
    stats->origins_retained = n;
    stats->prune_clamped = clamped;
  }
  return instance;
}

}  // namespace skyport

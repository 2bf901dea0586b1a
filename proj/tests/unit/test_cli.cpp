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

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "skyport/cli.hpp"
#include "skyport/json_io.hpp"
#include "test_support.hpp"

using namespace skyport;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_dir_counter = 0;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("skyport_cli_test_" + std::to_string(g_dir_counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"skyport"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

constexpr const char* kZonesCsv =
    "zone_id,name,lat,lon,is_airport\n"
    "1,Alpha,40.70,-74.00,0\n"
    "2,Beta,40.75,-73.95,0\n"
    "100,Airport,40.64,-73.78,1\n";

constexpr const char* kTripsCsv =
    "pickup_datetime,dropoff_datetime,PULocationID,DOLocationID\n"
    "2018-01-05 08:00:00,2018-01-05 08:40:00,1,100\n"
    "2018-01-05 09:00:00,2018-01-05 09:40:00,1,100\n"
    "2018-01-05 08:00:00,2018-01-05 08:15:00,1,2\n"
    "2018-01-05 10:00:00,2018-01-05 10:10:00,2,100\n"
    "2018-01-05 11:00:00,2018-01-05 11:10:00,2,100\n"
    "2018-01-05 12:00:00,2018-01-05 12:20:00,2,1\n";

struct CliFixture {
  TempDir dir;
  fs::path trips = dir.path / "trips.csv";
  fs::path zones = dir.path / "zones.csv";
  fs::path instance = dir.path / "instance.json";
  fs::path stats = dir.path / "stats.json";

  CliFixture() {
    write(trips, kTripsCsv);
    write(zones, kZonesCsv);
    REQUIRE(run_cli({"ingest", "--trips", trips.string(), "--zones",
                     zones.string(), "--out", instance.string(), "--stats",
                     stats.string()}) == 0);
  }
};

}  // namespace

TEST_CASE("ingest writes a valid instance and stats") {
  CliFixture fx;
  const ProblemInstance ins = instance_from_json(slurp(fx.instance));
  CHECK(validate(ins).empty());
  REQUIRE(ins.origin_count() == 2);
  CHECK(ins.demand(0, 0) == 2);
  CHECK(ins.demand(1, 0) == 2);
  CHECK(ins.ground_to_airport(0, 0) == 40.0);
  CHECK(ins.ground_to_airport(1, 0) == 10.0);

  const json stats = json::parse(slurp(fx.stats));
  CHECK(stats.at("rows") == 6);
  CHECK(stats.at("trips_retained") == 6);
  CHECK(stats.at("distinct_days") == 1);
  CHECK(stats.at("origins_retained") == 2);
}

TEST_CASE("ingest with a missing zones file exits 2") {
  TempDir dir;
  const fs::path trips = dir.path / "trips.csv";
  write(trips, kTripsCsv);
  CHECK(run_cli({"ingest", "--trips", trips.string(), "--zones",
                 (dir.path / "nope.csv").string()}) == 2);
}

TEST_CASE("solve writes the optimal solution for the instance") {
  CliFixture fx;
  const fs::path solution_path = fx.dir.path / "solution.json";
  REQUIRE(run_cli({"solve", "--instance", fx.instance.string(), "--p", "1",
                   "--method", "bf", "--out", solution_path.string()}) == 0);
  const HubSolution solution = solution_from_json(slurp(solution_path));
  const ProblemInstance ins = instance_from_json(slurp(fx.instance));
  Scenario sc;
  sc.p = 1;
  const test::OracleBest expected = test::oracle_best_subset(ins, sc, 1);
  CHECK(solution.objective == doctest::Approx(expected.objective));
  CHECK(solution.hubs == expected.hub_ids);
  CHECK(solution.meta.solver == "brute_force");
}

TEST_CASE("solve --no-meta is byte-identical across reruns") {
  CliFixture fx;
  const fs::path a = fx.dir.path / "a.json";
  const fs::path b = fx.dir.path / "b.json";
  for (const fs::path& out : {a, b}) {
    REQUIRE(run_cli({"solve", "--instance", fx.instance.string(), "--p", "1",
                     "--no-meta", "--out", out.string()}) == 0);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("meta") == std::string::npos);
}

TEST_CASE("solve on a corrupt instance exits 2") {
  TempDir dir;
  const fs::path bad = dir.path / "bad.json";
  write(bad, "{not json");
  CHECK(run_cli({"solve", "--instance", bad.string(), "--p", "1"}) == 2);
}

TEST_CASE("sweep emits per-scenario tables plus figure data") {
  CliFixture fx;
  const fs::path out_dir = fx.dir.path / "sweep";
  REQUIRE(run_cli({"sweep", "--instance", fx.instance.string(), "--p-values",
                   "0", "--p-values", "1", "--scenarios", "0:1", "--scenarios",
                   "10:1.1", "--out-dir", out_dir.string(), "--no-meta"}) ==
          0);
  CHECK(fs::exists(out_dir / "sweep_a0_b1.csv"));
  CHECK(fs::exists(out_dir / "sweep_a10_b1.1.csv"));

  const std::string normalized = slurp(out_dir / "normalized_objective.csv");
  CHECK(normalized.find("alpha,beta,p,normalized_objective") == 0);
  CHECK(normalized.find("0,1,0,1.000000000") != std::string::npos);

  const std::string directs = slurp(out_dir / "direct_connections.csv");
  CHECK(directs.find("10,1.1,0,") != std::string::npos);

  const std::string table = slurp(out_dir / "sweep_a0_b1.csv");
  CHECK(table.find("p,objective,") == 0);
  // two data rows (p = 0 and p = 1) plus header
  CHECK(std::count(table.begin(), table.end(), '\n') == 3);
}

TEST_CASE("analyze reproduces the tolerable arrival rate") {
  CliFixture fx;
  const fs::path solution_path = fx.dir.path / "solution.json";
  REQUIRE(run_cli({"solve", "--instance", fx.instance.string(), "--p", "1",
                   "--out", solution_path.string()}) == 0);
  const fs::path profiles = fx.dir.path / "profiles.csv";
  const fs::path report_path = fx.dir.path / "penetration.json";
  REQUIRE(run_cli({"analyze", "--instance", fx.instance.string(),
                   "--solution", solution_path.string(), "--trips",
                   fx.trips.string(), "--profiles", profiles.string(),
                   "--report", report_path.string(), "--servers", "12",
                   "--mu", "2.5", "--wait-minutes", "5"}) == 0);
  const json report = json::parse(slurp(report_path));
  CHECK(report.at("lambda_tol_floor") == 24);
  CHECK(report.at("servers") == 12);
  const std::string csv = slurp(profiles);
  CHECK(csv.find("hub,hour_0") == 0);
  CHECK(csv.find(",peak") != std::string::npos);
}

TEST_CASE("export produces MPS and GeoJSON artifacts") {
  CliFixture fx;
  const fs::path mps = fx.dir.path / "model.mps";
  REQUIRE(run_cli({"export", "--instance", fx.instance.string(), "--format",
                   "mps", "--p", "1", "--out", mps.string()}) == 0);
  const std::string mps_text = slurp(mps);
  CHECK(mps_text.find("ENDATA") != std::string::npos);
  CHECK(mps_text.find("'INTORG'") != std::string::npos);

  const fs::path solution_path = fx.dir.path / "solution.json";
  REQUIRE(run_cli({"solve", "--instance", fx.instance.string(), "--p", "1",
                   "--out", solution_path.string()}) == 0);
  const fs::path geo = fx.dir.path / "routes.geojson";
  REQUIRE(run_cli({"export", "--instance", fx.instance.string(), "--format",
                   "geojson", "--solution", solution_path.string(), "--out",
                   geo.string()}) == 0);
  const json collection = json::parse(slurp(geo));
  CHECK(collection.at("type") == "FeatureCollection");
  int lines = 0;
  for (const json& f : collection.at("features")) {
    if (f.at("geometry").at("type") == "LineString") ++lines;
  }
  CHECK(lines == 2);  // one per positive-demand pair
}

TEST_CASE("export rejects unknown formats with exit 2") {
  CliFixture fx;
  CHECK(run_cli({"export", "--instance", fx.instance.string(), "--format",
                 "dot", "--out", (fx.dir.path / "x").string()}) == 2);
}

TEST_CASE("geojson export without a solution exits 2") {
  CliFixture fx;
  CHECK(run_cli({"export", "--instance", fx.instance.string(), "--format",
                 "geojson", "--out", (fx.dir.path / "x").string()}) == 2);
}

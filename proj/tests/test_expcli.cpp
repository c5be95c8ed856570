// Copyright 2026 The qfreeze Authors
//
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

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qfreeze/cli.hpp"
#include "qfreeze/export.hpp"
#include "qfreeze/runner.hpp"
#include "qfreeze/scenario.hpp"

using namespace qfreeze;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "qfreeze_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

json small_config() {
  return json::parse(R"({
    "name": "small",
    "num_qubits": 2,
    "initial": {"triple": [1.0, 0.7, -0.7]},
    "clock": {"t2": [0.14, 0.90]},
    "noise": {"type": "pd_only"},
    "time_grid": {"start": 0.0, "stop": 0.5, "steps": 1},
    "basis": 1,
    "measures": [{"id": "coherence", "kind": "RE"}, {"id": "coherence", "kind": "L1"},
                 {"id": "quantum"}],
    "output": {"path": "small.csv"}
  })");
}

std::string error_field(const json& config) {
  try {
    parse_scenario(config);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::vector<const char*> argv{"qfreeze"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("config parsing accepts a valid scenario") {
  const Scenario s = parse_scenario(small_config());
  CHECK(s.name == "small");
  CHECK(s.time_grid.points().size() == 2);
  CHECK(s.measures.size() == 3);
  CHECK(s.measures[2].column() == "Q_RE");

  for (const auto& name : builtin_names()) {
    const Scenario b = builtin_scenario(name);
    const Scenario again = parse_scenario(scenario_to_json(b));
    CHECK(scenario_to_json(again) == scenario_to_json(b));
  }
}

TEST_CASE("config errors carry field paths") {
  json c = small_config();
  c["clock"]["t3"] = 1.0;
  CHECK(error_field(c) == "clock.t3");

  c = small_config();
  c["initial"]["triple"] = {1.0, 1.0, 1.0};
  CHECK(error_field(c) == "initial.triple");

  c = small_config();
  c["measures"][1]["kind"] = "KL";
  CHECK(error_field(c) == "measures[1].kind");

  c = small_config();
  c["time_grid"]["steps"] = 0;
  CHECK(error_field(c) == "time_grid.steps");

  c = small_config();
  c["time_grid"]["stop"] = 0.0;
  CHECK(error_field(c) == "time_grid.stop");

  c = small_config();
  c["measures"] = json::array();
  CHECK(error_field(c) == "measures");

  c = small_config();
  c.erase("basis");
  CHECK(error_field(c) == "basis");

  c = small_config();
  c["clock"]["t2"] = {0.14, -0.9};
  CHECK(error_field(c) == "clock.t2[1]");

  c = small_config();
  c["noise"]["type"] = "pd_plus_gad";
  CHECK(error_field(c) == "clock.t1");

  // quantum discord is a two-qubit measure
  c = small_config();
  c["num_qubits"] = 4;
  c["clock"]["t2"] = {0.16, 0.16, 0.16, 0.16};
  c["initial"]["triple"] = {1.0, 0.7, 0.7};
  c["measures"] = json::parse(R"([{"id": "coherence", "kind": "RE"}, {"id": "quantum"}])");
  CHECK(error_field(c) == "measures[1].id");

  c = small_config();
  c["initial"]["triple"] = {0.95, 0.62, -0.65};
  c["initial"]["perturbation_scales"] = {0.5};
  c["measures"] = json::parse(R"([{"id": "entanglement"}])");
  CHECK(error_field(c) == "measures[0].id");

  CHECK_THROWS_AS(builtin_scenario("fig9"), ConfigError);
}

TEST_CASE("small sweep exports csv and json lines") {
  Scenario s = parse_scenario(small_config());
  const SweepTable table = run_scenario(s, 1);
  REQUIRE(table.records.size() == 2);

  const fs::path csv = scratch_dir() / "small.csv";
  export_results(s, table, csv.string());
  const auto lines = lines_of(csv);
  CHECK(lines.size() == 3);
  CHECK(lines[0] == "t,c1,c2,c3,C_RE,C_RE_status,C_L1,C_L1_status,Q_RE,Q_RE_status");
  CHECK(lines[1].rfind("0,1,0.7,-0.7,0.390159695284,closed_form,0.7,closed_form,", 0) == 0);
  const std::string text = slurp(csv);
  CHECK(text.back() == '\n');

  const json meta = json::parse(slurp(csv.string() + ".meta.json"));
  CHECK(meta["log_base"] == 2);
  CHECK(meta["artifact_version"] == kArtifactVersion);
  CHECK(meta["seeds"].contains("initial"));
  CHECK(meta["tolerances"]["psd"] == 1e-9);

  const fs::path jl = scratch_dir() / "small.jsonl";
  write_jsonl(jl.string(), table);
  const SweepTable back = read_jsonl(jl.string());
  CHECK(back.measure_columns == table.measure_columns);
  CHECK(back.records == table.records);
  CHECK(lines_of(jl).size() == 2);
}

TEST_CASE("json lines round trip is bit exact for awkward doubles") {
  SweepTable table;
  table.measure_columns = {"C_RE", "C_F"};
  SweepRecord r;
  r.t = 0.1 + 0.2;
  r.c1 = 1.0 / 3.0;
  r.c2 = -5e-324;
  r.c3 = 0.7;
  r.values = {{0.39015969528359947, OptimizerStatus::ClosedForm}, {1e-17, OptimizerStatus::MaxIter}};
  table.records.push_back(r);
  table.records.push_back(r);
  table.records[1].t = 0.5;
  const fs::path jl = scratch_dir() / "awkward.jsonl";
  write_jsonl(jl.string(), table);
  CHECK(read_jsonl(jl.string()).records == table.records);
}

TEST_CASE("export rejects unwritable paths") {
  Scenario s = parse_scenario(small_config());
  const SweepTable table = run_scenario(s, 1);
  CHECK_THROWS_AS(export_results(s, table, "/nonexistent-dir/qfreeze/out.csv"), IoError);
  CHECK_THROWS_AS(export_results(s, SweepTable{}, (scratch_dir() / "empty.csv").string()), IoError);
}

TEST_CASE("runs are deterministic regardless of thread count") {
  Scenario s = parse_scenario(small_config());
  s.time_grid = {0.0, 0.5, 9};
  s.initial.triple = {0.95, 0.62, -0.65, 2};
  s.initial.perturbation_scales = {0.3, 0.6};
  s.initial.replicates = 3;
  s.initial.seed = 77;
  s.initial.keep_replicates = true;
  s.measures = {{MeasureId::Coherence, DistanceKind::RelativeEntropy},
                {MeasureId::Coherence, DistanceKind::Trace},
                {MeasureId::Coherence, DistanceKind::Fidelity},
                {MeasureId::CoherenceFloor, DistanceKind::Fidelity}};
  validate_scenario(s);

  std::vector<std::string> exports;
  for (unsigned threads : {1u, 3u, 8u}) {
    const SweepTable table = run_scenario(s, threads);
    const fs::path out = scratch_dir() / ("det_" + std::to_string(threads) + ".csv");
    export_results(s, table, out.string());
    exports.push_back(slurp(out) + slurp(out.string() + ".replicates.csv"));
  }
  CHECK(exports[0] == exports[1]);
  CHECK(exports[0] == exports[2]);

  s.initial.seed = 78;
  const SweepTable other = run_scenario(s, 1);
  const fs::path out = scratch_dir() / "det_other.csv";
  export_results(s, other, out.string());
  CHECK(slurp(out) + slurp(out.string() + ".replicates.csv") != exports[0]);
}

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch_dir();
  const fs::path good = dir / "good.json";
  {
    json c = small_config();
    c["output"]["path"] = (dir / "cli_small.csv").string();
    std::ofstream(good) << c.dump(2);
  }
  const fs::path bad = dir / "bad.json";
  {
    json c = small_config();
    c["time_grid"]["steps"] = 0;
    std::ofstream(bad) << c.dump(2);
  }
  const fs::path malformed = dir / "malformed.json";
  std::ofstream(malformed) << "{ \"name\": ";

  std::string text;
  CHECK(cli({"validate", good.string()}) == kExitOk);
  CHECK(cli({"validate", bad.string()}, &text) == kExitConfig);
  CHECK(text.find("time_grid.steps") != std::string::npos);
  CHECK(cli({"validate", malformed.string()}) == kExitConfig);
  CHECK(cli({"validate", (dir / "missing.json").string()}) == kExitConfig);
  CHECK(cli({"run", good.string()}) == kExitOk);
  CHECK(lines_of(dir / "cli_small.csv").size() == 3);
  CHECK(cli({"--threads", "2", "--seed", "5", "run", good.string(), "--out", (dir / "cli_seeded.csv").string()}) ==
        kExitOk);
  CHECK(cli({"run", good.string(), "--out", "/nonexistent-dir/qfreeze/out.csv"}) == kExitIo);
  CHECK(cli({"builtin", "fig9"}) == kExitConfig);
  CHECK(cli({"frobnicate"}) == kExitConfig);
  CHECK(cli({}) == kExitConfig);
  CHECK(cli({"builtin", "fig1", "--out", (dir / "cli_fig1.jsonl").string(), "--format", "jsonl"}) == kExitOk);
  CHECK(read_jsonl((dir / "cli_fig1.jsonl").string()).records.size() == 55);
}

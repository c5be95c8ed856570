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

#include "qfreeze/cli.hpp"

#include <chrono>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "qfreeze/errors.hpp"
#include "qfreeze/export.hpp"
#include "qfreeze/runner.hpp"
#include "qfreeze/scenario.hpp"

namespace qfreeze {

namespace {

int execute(Scenario s, const std::string& out_path, unsigned threads, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SweepTable table = run_scenario(s, threads);
  const std::string path = out_path.empty() ? s.output_path : out_path;
  export_results(s, table, path);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << s.name << ": wrote " << table.records.size() << " records to " << path << " ("
      << seconds << " s)\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open-system coherence and correlation sweeps"};
  app.require_subcommand(1);

  unsigned threads = 0;
  long long seed = -1;
  app.add_option("--threads", threads, "Worker threads (0 = auto)");
  app.add_option("--seed", seed, "Override every seed in the scenario")->check(CLI::NonNegativeNumber);

  std::string config_path, out_path, builtin_name, format;
  CLI::App* run = app.add_subcommand("run", "Execute a scenario config and export results");
  run->add_option("config", config_path, "Scenario JSON")->required();
  run->add_option("--out", out_path, "Output path (overrides output.path)");

  CLI::App* builtin = app.add_subcommand("builtin", "Run a builtin scenario");
  builtin->add_option("name", builtin_name, "fig1, fig2 or fig3")->required();
  builtin->add_option("--out", out_path, "Output path");
  builtin->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

  CLI::App* validate = app.add_subcommand("validate", "Check a scenario config against the schema");
  validate->add_option("config", config_path, "Scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    Scenario s;
    if (*validate) {
      s = load_scenario(config_path);
      out << config_path << ": ok (" << s.name << ", " << s.time_grid.points().size()
          << " grid points, " << s.measures.size() << " measures)\n";
      return kExitOk;
    }
    if (*run) {
      s = load_scenario(config_path);
    } else {
      s = builtin_scenario(builtin_name);
      if (format == "jsonl") {
        s.format = ExportFormat::JsonLines;
        s.output_path = s.name + ".jsonl";
      }
    }
    if (seed >= 0) {
      s.initial.seed = static_cast<std::uint64_t>(seed);
      s.optimizer.seed = static_cast<std::uint64_t>(seed);
    }
    return execute(std::move(s), out_path, threads, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NonphysicalStateError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConsistencyError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace qfreeze

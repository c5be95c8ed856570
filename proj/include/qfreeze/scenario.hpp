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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfreeze/channels.hpp"
#include "qfreeze/measures.hpp"
#include "qfreeze/optimize.hpp"
#include "qfreeze/states.hpp"

namespace qfreeze {

// Invalid scenario configuration. field() is the JSON path of the offending
// entry, e.g. "initial.triple".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class NoiseModel { PdOnly, PdPlusGad, Flip };

enum class MeasureId {
  Coherence,       // C_<kind>
  CoherenceFloor,  // floor_<kind>
  Quantum,         // Q_RE
  Classical,       // P_RE
  Total,           // T_RE
  Entanglement,    // E_RE
  GlobalDiscord,   // GD_RE
  ClassicalAxis,   // chi_axis: index of the closest-classical projection axis
};

struct MeasureSpec {
  MeasureId id = MeasureId::Coherence;
  DistanceKind kind = DistanceKind::RelativeEntropy;

  std::string column() const;
};

enum class ExportFormat { Csv, JsonLines };

struct InitialCondition {
  CorrelationTriple triple;
  // Empty: a single deterministic BD state. Otherwise `replicates` random
  // non-BD states with the same triple per listed perturbation scale.
  std::vector<double> perturbation_scales;
  int replicates = 1;
  std::uint64_t seed = 1;
  bool keep_replicates = false;
};

struct TimeGrid {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  std::vector<double> points() const;
};

struct Scenario {
  std::string name;
  int num_qubits = 2;
  InitialCondition initial;
  NoiseClock clock;
  NoiseModel noise = NoiseModel::PdOnly;
  PauliAxis flip_axis = PauliAxis::Z;  // used when noise == Flip
  TimeGrid time_grid;
  PauliAxis basis = PauliAxis::X;
  std::vector<MeasureSpec> measures;
  std::string output_path;
  ExportFormat format = ExportFormat::Csv;
  OptimizerOptions optimizer;
  std::vector<std::string> notes;

  // Axis whose correlator is frozen by the noise (3 for PD and PD+GAD).
  PauliAxis noise_axis() const { return noise == NoiseModel::Flip ? flip_axis : PauliAxis::Z; }
};

// Parses and validates a scenario. Throws ConfigError with the field path
// of the first problem found.
Scenario parse_scenario(const nlohmann::json& config);
Scenario load_scenario(const std::string& path);

// Full validation of an in-memory scenario (also run by parse_scenario).
void validate_scenario(const Scenario& s);

nlohmann::json scenario_to_json(const Scenario& s);

// Builtin scenarios "fig1", "fig2" and "fig3". Throws ConfigError for
// unknown names.
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace qfreeze

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

#include <stdexcept>
#include <string>

#include "qfreeze/runner.hpp"
#include "qfreeze/scenario.hpp"

namespace qfreeze {

inline constexpr const char* kArtifactVersion = "1.0.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Header names: t, c1, c2, c3, then each measure column followed by its
// <column>_status. Replicate rows carry scale_index and replicate first.
std::vector<std::string> header_columns(const SweepTable& table, bool replicate_rows);

// CSV with 12 significant digits per value and '\n' row endings.
void write_csv(const std::string& path, const SweepTable& table);

// One JSON object per line with the same field names as the CSV header;
// doubles are written with round-trip precision.
void write_jsonl(const std::string& path, const SweepTable& table);
SweepTable read_jsonl(const std::string& path);

void write_replicates_csv(const std::string& path, const SweepTable& table);

// Sidecar describing units, tolerances, seeds and the scenario itself.
void write_metadata(const std::string& path, const Scenario& s, const SweepTable& table);

// Writes the table in the scenario's format, plus <path>.meta.json and, for
// ensembles with keep_replicates, <path>.replicates.csv. Throws IoError.
void export_results(const Scenario& s, const SweepTable& table, const std::string& path);

}  // namespace qfreeze

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
#include <vector>

#include "qfreeze/measures.hpp"
#include "qfreeze/scenario.hpp"

namespace qfreeze {

// An invariant check failed during a sweep (negative measure, Kraus engine
// disagreeing with the analytic triple, nonphysical evolved state).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MeasureValue {
  double value = 0.0;
  OptimizerStatus status = OptimizerStatus::ClosedForm;
  bool operator==(const MeasureValue&) const = default;
};

// One time-grid row. `values` is aligned with SweepTable::measure_columns.
struct SweepRecord {
  double t = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  std::vector<MeasureValue> values;
  bool operator==(const SweepRecord&) const = default;
};

// Per-replicate row of an ensemble run.
struct ReplicateRecord {
  int scale_index = 0;
  int replicate = 0;
  SweepRecord record;
  bool operator==(const ReplicateRecord&) const = default;
};

struct SweepTable {
  std::vector<std::string> measure_columns;
  std::vector<SweepRecord> records;        // replicate means for ensembles
  std::vector<ReplicateRecord> replicates; // filled when keep_replicates is set
};

// Evaluates the scenario on every grid point. Grid points are distributed
// over `threads` workers (0 = hardware concurrency); output is independent
// of the thread count. Throws NumericalFailure on invariant violations.
SweepTable run_scenario(const Scenario& s, unsigned threads = 1);

// Seed for an optimizer call, mixed from the scenario seed and the call's
// position in the sweep.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c);

}  // namespace qfreeze

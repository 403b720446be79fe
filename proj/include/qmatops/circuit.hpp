// Copyright 2026 The qmatops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "qmatops/gates.hpp"
#include "qmatops/state.hpp"
#include "qmatops/tally.hpp"

namespace qmatops {

struct TaggedOp {
  Operation op;
  // Tally key; empty means "use the step label".
  std::string tag;
};

struct CircuitStep {
  std::string label;  // "2", "3", ...
  std::string name;   // operator name, e.g. "W(1)_R2B1"
  std::vector<TaggedOp> ops;
};

struct Circuit {
  RegisterLayout layout;
  std::vector<CircuitStep> steps;

  CircuitStep& add_step(std::string label, std::string name);
  std::vector<AppliedOp> applied_ops() const;
};

struct StepRecord {
  std::string label;
  std::string name;
  double norm_squared = 0.0;
  double checksum = 0.0;
};

struct CircuitRun {
  StateVector final_state;
  std::vector<StepRecord> records;
  /// Input state followed by the state after each step; only filled when
  /// requested.
  std::vector<StateVector> history;
};

/// Applies every step in order. Throws std::logic_error if any step moves the
/// squared norm away from 1 by more than 1e-12.
CircuitRun run_circuit(const Circuit& circuit, StateVector initial, bool keep_history);

}  // namespace qmatops

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

#include "qmatops/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace qmatops {

namespace {
constexpr double kNormDriftTolerance = 1e-12;
}

CircuitStep& Circuit::add_step(std::string label, std::string name) {
  steps.push_back(CircuitStep{std::move(label), std::move(name), {}});
  return steps.back();
}

std::vector<AppliedOp> Circuit::applied_ops() const {
  std::vector<AppliedOp> out;
  for (const auto& step : steps) {
    for (const auto& tagged : step.ops) {
      out.push_back(AppliedOp{tagged.tag.empty() ? step.label : tagged.tag, tagged.op});
    }
  }
  return out;
}

CircuitRun run_circuit(const Circuit& circuit, StateVector initial, bool keep_history) {
  if (!(initial.layout() == circuit.layout)) {
    throw PreconditionError("initial state layout does not match the circuit layout");
  }
  std::vector<StepRecord> records;
  std::vector<StateVector> history;
  if (keep_history) history.push_back(initial);

  StateVector state = std::move(initial);
  for (const auto& step : circuit.steps) {
    for (const auto& tagged : step.ops) state = qmatops::apply(state, tagged.op);
    const double norm2 = state.norm_squared();
    if (std::abs(norm2 - 1.0) > kNormDriftTolerance) {
      throw std::logic_error("step " + step.label + " moved the squared norm to " +
                             std::to_string(norm2));
    }
    records.push_back(StepRecord{step.label, step.name, norm2, state_checksum(state)});
    if (keep_history) history.push_back(state);
  }
  return CircuitRun{std::move(state), std::move(records), std::move(history)};
}

}  // namespace qmatops

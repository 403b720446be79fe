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

#include <cstddef>
#include <vector>

namespace qmatops {

enum class GateKind { kX, kCnot, kToffoli };

/// Qubits are listed controls first, target last.
struct Gate {
  GateKind kind = GateKind::kX;
  std::vector<std::size_t> qubits;
};

/// Reversible X/CNOT/Toffoli network for a multi-controlled X.
///
/// Qubit numbering: controls are 0 .. c-1, the target is c, work qubits are
/// c+1 .. c+num_work. Work qubits start and end in |0>.
struct GateNetwork {
  std::size_t num_controls = 0;
  std::size_t num_work = 0;
  std::vector<Gate> gates;

  std::size_t target() const { return num_controls; }
  std::size_t num_qubits() const { return num_controls + 1 + num_work; }
};

inline constexpr std::size_t kMaxMcxControls = 24;

/// Clean-ancilla Toffoli ladder for a num_controls-controlled X.
///
/// One control is a single CNOT. For c >= 2 controls the AND of all controls
/// is accumulated into c-1 work qubits with c-1 Toffolis, copied onto the
/// target with one CNOT and uncomputed with c-1 more Toffolis, so the network
/// holds exactly 2(c-1) Toffolis for every c >= 1. A control with polarity 0
/// is conjugated by X on both sides. `polarity` may be empty (all ones).
GateNetwork decompose_mcx(std::size_t num_controls, const std::vector<bool>& polarity = {});

}  // namespace qmatops

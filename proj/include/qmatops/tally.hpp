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

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "qmatops/gates.hpp"
#include "qmatops/layout.hpp"
#include "qmatops/mcx.hpp"

namespace qmatops {

/// Raw counts per primitive class. `toffoli` is the headline
/// Toffoli-equivalent figure (CNOT and single-qubit gates weigh zero there).
struct GateCounts {
  std::uint64_t toffoli = 0;
  std::uint64_t cnot = 0;
  std::uint64_t single_qubit = 0;
  std::uint64_t swaps = 0;

  GateCounts& operator+=(const GateCounts& o) {
    toffoli += o.toffoli;
    cnot += o.cnot;
    single_qubit += o.single_qubit;
    swaps += o.swaps;
    return *this;
  }
  friend GateCounts operator+(GateCounts a, const GateCounts& b) { return a += b; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct GateTally {
  GateCounts total;
  std::map<std::string, GateCounts> per_step;
};

/// One operation of an executed circuit together with the step label it is
/// accounted under.
struct AppliedOp {
  std::string step;
  Operation op;
};

GateCounts count_gates(const GateNetwork& network);

/// Cost of one operation, expanding controlled operations through
/// decompose_mcx. A controlled swap of one qubit pair under c controls costs
/// CNOT, MCX(c + 1), CNOT. Uncontrolled swaps count as `swaps`.
GateCounts gate_cost(const Operation& op, const RegisterLayout& layout);

/// Throws PreconditionError on an empty trace.
GateTally tally_gates(std::span<const AppliedOp> trace, const RegisterLayout& layout);

}  // namespace qmatops

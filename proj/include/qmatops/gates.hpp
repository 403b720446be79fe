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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmatops/layout.hpp"
#include "qmatops/state.hpp"

namespace qmatops {

/// A qubit pinned to a bit value, after resolving register names.
struct ResolvedCondition {
  std::size_t qubit = 0;  // global qubit index
  bool value = false;
};

/// P = |pattern><pattern| on the referenced qubits, identity elsewhere.
///
/// Conditions may be given per register (a basis index spread over all of the
/// register's qubits) or per qubit. An empty projector is the identity.
class Projector {
 public:
  Projector() = default;

  Projector& on_register(std::string reg, BasisIndex value);
  Projector& on_qubit(std::string reg, std::size_t qubit, bool value);

  bool is_identity() const { return registers_.empty() && qubits_.empty(); }

  /// Expands to per-qubit conditions sorted by global qubit. Throws if a
  /// register is unknown, a value does not fit, or a qubit is referenced twice.
  std::vector<ResolvedCondition> resolve(const RegisterLayout& layout) const;

  struct RegisterCondition {
    std::string reg;
    BasisIndex value = 0;
  };
  struct QubitCondition {
    QubitRef qubit;
    bool value = false;
  };
  const std::vector<RegisterCondition>& register_conditions() const { return registers_; }
  const std::vector<QubitCondition>& qubit_conditions() const { return qubits_; }

 private:
  std::vector<RegisterCondition> registers_;
  std::vector<QubitCondition> qubits_;
};

struct FlipQubit {
  QubitRef target;
};

/// Qubit-pairwise exchange of two equal-width registers.
struct SwapRegisters {
  std::string a;
  std::string b;
};

struct SwapQubits {
  QubitRef a;
  QubitRef b;
};

using ControlledAction = std::variant<FlipQubit, SwapRegisters, SwapQubits>;

/// P (x) U + (I - P) (x) I, with U a Pauli-X or a SWAP.
struct ControlledOp {
  Projector projector;
  ControlledAction action;
};

/// H on every qubit of the listed registers plus the listed single qubits.
struct HadamardLayer {
  std::vector<std::string> registers;
  std::vector<QubitRef> qubits;
};

/// Uncontrolled exchange of two equal-width registers.
struct RegisterSwap {
  std::string a;
  std::string b;
};

using Operation = std::variant<ControlledOp, HadamardLayer, RegisterSwap>;

/// Global qubit indices of the projector and the target qubits of a
/// ControlledOp, validated for disjointness.
struct ResolvedControlledOp {
  std::vector<ResolvedCondition> controls;
  /// Flip: one entry with .first == .second. Swap: the exchanged pairs.
  std::vector<std::pair<std::size_t, std::size_t>> targets;
  bool is_flip = false;
};

ResolvedControlledOp resolve(const ControlledOp& op, const RegisterLayout& layout);

/// Sorted, duplicate-free global qubits hit by a Hadamard layer.
std::vector<std::size_t> resolve(const HadamardLayer& layer, const RegisterLayout& layout);

StateVector apply_controlled(const StateVector& state, const ControlledOp& op);
StateVector apply_hadamard_layer(const StateVector& state, const HadamardLayer& layer);
StateVector apply_register_swap(const StateVector& state, const std::string& reg_a,
                                const std::string& reg_b);
StateVector apply(const StateVector& state, const Operation& op);

}  // namespace qmatops

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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmatops/matrix.hpp"

namespace qmatops {

struct Register {
  std::string name;
  std::size_t width = 0;

  friend bool operator==(const Register&, const Register&) = default;
};

/// A single qubit addressed by register name and position inside it.
/// Position 0 is the register's most significant qubit.
struct QubitRef {
  std::string reg;
  std::size_t qubit = 0;

  friend bool operator==(const QubitRef&, const QubitRef&) = default;
};

/// Assignment of basis values to named registers, e.g. {"B1", 0}.
using RegisterValues = std::map<std::string, BasisIndex>;

/// Ordered named registers concatenated most-significant first.
///
/// Global qubit g (0 = first qubit of the first register) occupies bit
/// (total_qubits - 1 - g) of a basis index, so |i>_R|j>_C with R of width n
/// and C of width m has basis index i * 2^m + j.
class RegisterLayout {
 public:
  static constexpr std::size_t kMaxQubits = 26;

  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Register> registers);

  const std::vector<Register>& registers() const { return registers_; }
  std::size_t total_qubits() const { return total_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << total_qubits_; }

  bool contains(std::string_view name) const;
  std::size_t width(std::string_view name) const;
  /// Global index of the register's qubit 0.
  std::size_t offset(std::string_view name) const;
  std::size_t global_qubit(const QubitRef& q) const;

  BasisIndex bit_mask(std::size_t global_qubit) const {
    return BasisIndex{1} << (total_qubits_ - 1 - global_qubit);
  }

  BasisIndex register_value(BasisIndex basis, std::string_view name) const;
  BasisIndex with_register_value(BasisIndex basis, std::string_view name,
                                 BasisIndex value) const;
  /// Basis index from a full assignment; registers not listed are zero.
  BasisIndex compose(const RegisterValues& values) const;

  /// Registers of `this` followed by those of `other`.
  RegisterLayout concat(const RegisterLayout& other) const;

  /// Human-readable label such as "|01>_R1|10>_C1".
  std::string basis_label(BasisIndex basis) const;

  friend bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
    return a.registers_ == b.registers_;
  }

 private:
  std::size_t index_of(std::string_view name) const;

  std::vector<Register> registers_;
  std::vector<std::size_t> offsets_;
  std::size_t total_qubits_ = 0;
};

std::string to_binary(BasisIndex value, std::size_t width);

}  // namespace qmatops

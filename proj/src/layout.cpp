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

#include "qmatops/layout.hpp"

#include <algorithm>

namespace qmatops {

RegisterLayout::RegisterLayout(std::vector<Register> registers)
    : registers_(std::move(registers)) {
  offsets_.reserve(registers_.size());
  for (std::size_t r = 0; r < registers_.size(); ++r) {
    const auto& reg = registers_[r];
    if (reg.name.empty()) throw PreconditionError("register name must be non-empty");
    if (reg.width == 0) {
      throw PreconditionError("register " + reg.name + " has width 0; widths must be >= 1");
    }
    for (std::size_t s = 0; s < r; ++s) {
      if (registers_[s].name == reg.name) {
        throw PreconditionError("duplicate register name " + reg.name);
      }
    }
    offsets_.push_back(total_qubits_);
    total_qubits_ += reg.width;
  }
  if (total_qubits_ > kMaxQubits) {
    throw PreconditionError("layout needs " + std::to_string(total_qubits_) +
                            " qubits; the dense simulator caps at " +
                            std::to_string(kMaxQubits));
  }
}

std::size_t RegisterLayout::index_of(std::string_view name) const {
  for (std::size_t r = 0; r < registers_.size(); ++r) {
    if (registers_[r].name == name) return r;
  }
  throw PreconditionError("unknown register " + std::string(name));
}

bool RegisterLayout::contains(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

std::size_t RegisterLayout::width(std::string_view name) const {
  return registers_[index_of(name)].width;
}

std::size_t RegisterLayout::offset(std::string_view name) const {
  return offsets_[index_of(name)];
}

std::size_t RegisterLayout::global_qubit(const QubitRef& q) const {
  const std::size_t r = index_of(q.reg);
  if (q.qubit >= registers_[r].width) {
    throw PreconditionError("qubit " + std::to_string(q.qubit) + " out of range for register " +
                            q.reg);
  }
  return offsets_[r] + q.qubit;
}

BasisIndex RegisterLayout::register_value(BasisIndex basis, std::string_view name) const {
  const std::size_t r = index_of(name);
  const std::size_t shift = total_qubits_ - offsets_[r] - registers_[r].width;
  const BasisIndex mask = (BasisIndex{1} << registers_[r].width) - 1;
  return (basis >> shift) & mask;
}

BasisIndex RegisterLayout::with_register_value(BasisIndex basis, std::string_view name,
                                               BasisIndex value) const {
  const std::size_t r = index_of(name);
  const std::size_t width = registers_[r].width;
  if (value >> width != 0) {
    throw PreconditionError("value " + std::to_string(value) + " does not fit register " +
                            std::string(name) + " of width " + std::to_string(width));
  }
  const std::size_t shift = total_qubits_ - offsets_[r] - width;
  const BasisIndex mask = ((BasisIndex{1} << width) - 1) << shift;
  return (basis & ~mask) | (value << shift);
}

BasisIndex RegisterLayout::compose(const RegisterValues& values) const {
  BasisIndex basis = 0;
  for (const auto& [name, value] : values) basis = with_register_value(basis, name, value);
  return basis;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout& other) const {
  std::vector<Register> regs = registers_;
  regs.insert(regs.end(), other.registers_.begin(), other.registers_.end());
  return RegisterLayout(std::move(regs));
}

std::string RegisterLayout::basis_label(BasisIndex basis) const {
  std::string out;
  for (const auto& reg : registers_) {
    out += "|" + to_binary(register_value(basis, reg.name), reg.width) + ">_" + reg.name;
  }
  return out;
}

std::string to_binary(BasisIndex value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t b = 0; b < width; ++b) {
    if ((value >> (width - 1 - b)) & 1U) s[b] = '1';
  }
  return s;
}

}  // namespace qmatops

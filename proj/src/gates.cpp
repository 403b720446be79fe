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

#include "qmatops/gates.hpp"

#include <algorithm>
#include <cmath>

#include "overloaded.hpp"

namespace qmatops {

namespace {

using detail::Overloaded;

struct ControlMask {
  BasisIndex mask = 0;
  BasisIndex value = 0;
};

ControlMask control_mask(const std::vector<ResolvedCondition>& controls,
                         const RegisterLayout& layout) {
  ControlMask m;
  for (const auto& c : controls) {
    const BasisIndex bit = layout.bit_mask(c.qubit);
    m.mask |= bit;
    if (c.value) m.value |= bit;
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> register_pairs(const RegisterLayout& layout,
                                                                const std::string& a,
                                                                const std::string& b) {
  if (a == b) throw PreconditionError("cannot swap register " + a + " with itself");
  const std::size_t wa = layout.width(a);
  const std::size_t wb = layout.width(b);
  if (wa != wb) {
    throw PreconditionError("swapped registers differ in width (" + a + ":" + std::to_string(wa) +
                            ", " + b + ":" + std::to_string(wb) + ")");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t oa = layout.offset(a);
  const std::size_t ob = layout.offset(b);
  for (std::size_t q = 0; q < wa; ++q) pairs.emplace_back(oa + q, ob + q);
  return pairs;
}

// Exchanges bit pairs of every basis index selected by `ctrl`. The pairs are
// disjoint, so the permutation is an involution and each orbit is visited once.
std::vector<Complex> permute_pairs(std::vector<Complex> amps, const ControlMask& ctrl,
                                   const std::vector<std::pair<BasisIndex, BasisIndex>>& bits) {
  const BasisIndex dim = amps.size();
  for (BasisIndex i = 0; i < dim; ++i) {
    if ((i & ctrl.mask) != ctrl.value) continue;
    BasisIndex j = i;
    for (const auto& [ma, mb] : bits) {
      if (((i & ma) != 0) != ((i & mb) != 0)) j ^= (ma | mb);
    }
    if (i < j) std::swap(amps[i], amps[j]);
  }
  return amps;
}

}  // namespace

Projector& Projector::on_register(std::string reg, BasisIndex value) {
  registers_.push_back({std::move(reg), value});
  return *this;
}

Projector& Projector::on_qubit(std::string reg, std::size_t qubit, bool value) {
  qubits_.push_back({QubitRef{std::move(reg), qubit}, value});
  return *this;
}

std::vector<ResolvedCondition> Projector::resolve(const RegisterLayout& layout) const {
  std::vector<ResolvedCondition> out;
  for (const auto& rc : registers_) {
    const std::size_t width = layout.width(rc.reg);
    if (rc.value >> width != 0) {
      throw PreconditionError("projector value " + std::to_string(rc.value) +
                              " does not fit register " + rc.reg);
    }
    const std::size_t offset = layout.offset(rc.reg);
    for (std::size_t q = 0; q < width; ++q) {
      out.push_back({offset + q, ((rc.value >> (width - 1 - q)) & 1U) != 0});
    }
  }
  for (const auto& qc : qubits_) out.push_back({layout.global_qubit(qc.qubit), qc.value});
  std::sort(out.begin(), out.end(),
            [](const ResolvedCondition& a, const ResolvedCondition& b) { return a.qubit < b.qubit; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].qubit == out[i - 1].qubit) {
      throw PreconditionError("projector references qubit " + std::to_string(out[i].qubit) +
                              " more than once");
    }
  }
  return out;
}

ResolvedControlledOp resolve(const ControlledOp& op, const RegisterLayout& layout) {
  ResolvedControlledOp r;
  r.controls = op.projector.resolve(layout);
  std::visit(Overloaded{
                 [&](const FlipQubit& f) {
                   const std::size_t g = layout.global_qubit(f.target);
                   r.targets.emplace_back(g, g);
                   r.is_flip = true;
                 },
                 [&](const SwapRegisters& s) { r.targets = register_pairs(layout, s.a, s.b); },
                 [&](const SwapQubits& s) {
                   const std::size_t a = layout.global_qubit(s.a);
                   const std::size_t b = layout.global_qubit(s.b);
                   if (a == b) throw PreconditionError("cannot swap a qubit with itself");
                   r.targets.emplace_back(a, b);
                 },
             },
             op.action);
  for (const auto& c : r.controls) {
    for (const auto& [a, b] : r.targets) {
      if (c.qubit == a || c.qubit == b) {
        throw PreconditionError("projector and target share qubit " + std::to_string(c.qubit));
      }
    }
  }
  return r;
}

std::vector<std::size_t> resolve(const HadamardLayer& layer, const RegisterLayout& layout) {
  std::vector<std::size_t> qubits;
  for (const auto& reg : layer.registers) {
    const std::size_t offset = layout.offset(reg);
    for (std::size_t q = 0; q < layout.width(reg); ++q) qubits.push_back(offset + q);
  }
  for (const auto& q : layer.qubits) qubits.push_back(layout.global_qubit(q));
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw PreconditionError("duplicate Hadamard target");
  }
  return qubits;
}

StateVector apply_controlled(const StateVector& state, const ControlledOp& op) {
  const auto& layout = state.layout();
  const ResolvedControlledOp r = resolve(op, layout);
  const ControlMask ctrl = control_mask(r.controls, layout);
  const auto in = state.amplitudes();
  std::vector<Complex> amps(in.begin(), in.end());

  if (r.is_flip) {
    const BasisIndex t = layout.bit_mask(r.targets.front().first);
    for (BasisIndex i = 0; i < amps.size(); ++i) {
      if ((i & ctrl.mask) == ctrl.value && (i & t) == 0) std::swap(amps[i], amps[i | t]);
    }
    return StateVector(layout, std::move(amps));
  }

  std::vector<std::pair<BasisIndex, BasisIndex>> bits;
  for (const auto& [a, b] : r.targets) bits.emplace_back(layout.bit_mask(a), layout.bit_mask(b));
  return StateVector(layout, permute_pairs(std::move(amps), ctrl, bits));
}

StateVector apply_hadamard_layer(const StateVector& state, const HadamardLayer& layer) {
  const auto& layout = state.layout();
  const auto qubits = resolve(layer, layout);
  const auto in = state.amplitudes();
  std::vector<Complex> amps(in.begin(), in.end());
  const double h = 1.0 / std::sqrt(2.0);
  for (const std::size_t q : qubits) {
    const BasisIndex t = layout.bit_mask(q);
    for (BasisIndex i = 0; i < amps.size(); ++i) {
      if ((i & t) != 0) continue;
      const Complex a = amps[i];
      const Complex b = amps[i | t];
      amps[i] = (a + b) * h;
      amps[i | t] = (a - b) * h;
    }
  }
  return StateVector(layout, std::move(amps));
}

StateVector apply_register_swap(const StateVector& state, const std::string& reg_a,
                                const std::string& reg_b) {
  const auto& layout = state.layout();
  std::vector<std::pair<BasisIndex, BasisIndex>> bits;
  for (const auto& [a, b] : register_pairs(layout, reg_a, reg_b)) {
    bits.emplace_back(layout.bit_mask(a), layout.bit_mask(b));
  }
  const auto in = state.amplitudes();
  return StateVector(layout,
                     permute_pairs(std::vector<Complex>(in.begin(), in.end()), ControlMask{}, bits));
}

StateVector apply(const StateVector& state, const Operation& op) {
  return std::visit(Overloaded{
                        [&](const ControlledOp& c) { return apply_controlled(state, c); },
                        [&](const HadamardLayer& h) { return apply_hadamard_layer(state, h); },
                        [&](const RegisterSwap& s) { return apply_register_swap(state, s.a, s.b); },
                    },
                    op);
}

}  // namespace qmatops

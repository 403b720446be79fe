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

#include "qmatops/tally.hpp"

#include "overloaded.hpp"

namespace qmatops {

namespace {

// Multi-controlled X over the given conditions; zero controls is a bare X.
GateCounts mcx_cost(const std::vector<ResolvedCondition>& controls) {
  if (controls.empty()) return GateCounts{.single_qubit = 1};
  std::vector<bool> polarity;
  polarity.reserve(controls.size());
  for (const auto& c : controls) polarity.push_back(c.value);
  return count_gates(decompose_mcx(controls.size(), polarity));
}

}  // namespace

GateCounts count_gates(const GateNetwork& network) {
  GateCounts counts;
  for (const auto& g : network.gates) {
    switch (g.kind) {
      case GateKind::kX:
        ++counts.single_qubit;
        break;
      case GateKind::kCnot:
        ++counts.cnot;
        break;
      case GateKind::kToffoli:
        ++counts.toffoli;
        break;
    }
  }
  return counts;
}

GateCounts gate_cost(const Operation& op, const RegisterLayout& layout) {
  return std::visit(
      detail::Overloaded{
          [&](const ControlledOp& c) {
            const ResolvedControlledOp r = resolve(c, layout);
            if (r.is_flip) return mcx_cost(r.controls);
            GateCounts total;
            if (r.controls.empty()) {
              total.swaps = r.targets.size();
              return total;
            }
            // Fredkin per pair: CNOT(b->a), MCX(controls + a -> b), CNOT(b->a).
            auto extended = r.controls;
            extended.push_back({r.targets.front().first, true});
            const GateCounts per_pair = mcx_cost(extended) + GateCounts{.cnot = 2};
            for (std::size_t p = 0; p < r.targets.size(); ++p) total += per_pair;
            return total;
          },
          [&](const HadamardLayer& h) {
            return GateCounts{.single_qubit = resolve(h, layout).size()};
          },
          [&](const RegisterSwap& s) {
            if (s.a == s.b) throw PreconditionError("cannot swap register " + s.a + " with itself");
            if (layout.width(s.a) != layout.width(s.b)) {
              throw PreconditionError("swapped registers differ in width");
            }
            return GateCounts{.swaps = layout.width(s.a)};
          },
      },
      op);
}

GateTally tally_gates(std::span<const AppliedOp> trace, const RegisterLayout& layout) {
  if (trace.empty()) throw PreconditionError("gate tally needs a nonempty trace");
  GateTally tally;
  for (const auto& applied : trace) {
    const GateCounts c = gate_cost(applied.op, layout);
    tally.per_step[applied.step] += c;
    tally.total += c;
  }
  return tally;
}

}  // namespace qmatops

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

#include "qmatops/mcx.hpp"

#include <string>

#include "qmatops/matrix.hpp"

namespace qmatops {

GateNetwork decompose_mcx(std::size_t num_controls, const std::vector<bool>& polarity) {
  if (num_controls < 1 || num_controls > kMaxMcxControls) {
    throw PreconditionError("MCX needs 1.." + std::to_string(kMaxMcxControls) +
                            " controls, got " + std::to_string(num_controls));
  }
  if (!polarity.empty() && polarity.size() != num_controls) {
    throw PreconditionError("polarity list length differs from the control count");
  }

  GateNetwork net;
  net.num_controls = num_controls;
  net.num_work = num_controls >= 2 ? num_controls - 1 : 0;
  const std::size_t target = net.target();
  const auto work = [&](std::size_t i) { return num_controls + 1 + i; };

  std::vector<Gate> flips;
  for (std::size_t c = 0; c < polarity.size(); ++c) {
    if (!polarity[c]) flips.push_back({GateKind::kX, {c}});
  }
  net.gates = flips;

  if (num_controls == 1) {
    net.gates.push_back({GateKind::kCnot, {0, target}});
  } else {
    std::vector<Gate> ladder;
    ladder.push_back({GateKind::kToffoli, {0, 1, work(0)}});
    for (std::size_t c = 2; c < num_controls; ++c) {
      ladder.push_back({GateKind::kToffoli, {c, work(c - 2), work(c - 1)}});
    }
    net.gates.insert(net.gates.end(), ladder.begin(), ladder.end());
    net.gates.push_back({GateKind::kCnot, {work(num_controls - 2), target}});
    net.gates.insert(net.gates.end(), ladder.rbegin(), ladder.rend());
  }

  net.gates.insert(net.gates.end(), flips.begin(), flips.end());
  return net;
}

}  // namespace qmatops

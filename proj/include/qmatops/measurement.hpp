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
#include <cstdint>
#include <optional>

#include "qmatops/layout.hpp"
#include "qmatops/state.hpp"

namespace qmatops {

inline constexpr double kZeroProbability = 1e-300;

struct PostSelection {
  RegisterValues pattern;
  double probability = 0.0;
  /// Absent when the pattern is (numerically) never observed.
  std::optional<StateVector> renormalized_state;
};

/// Projects onto the given register values and renormalizes.
///
/// The probability is the matched squared norm divided by the total squared
/// norm, accumulated in one pass, so a pattern that captures all of the mass
/// reports exactly 1.
PostSelection post_select(const StateVector& state, const RegisterValues& pattern);

struct SamplingResult {
  std::uint64_t shots = 0;
  std::uint64_t accepted = 0;
  double frequency = 0.0;
};

/// Draws `shots` joint outcomes of the pattern's registers from a seeded
/// generator and counts how often the pattern itself comes up.
SamplingResult sample_post_selection(const StateVector& state, const RegisterValues& pattern,
                                     std::uint64_t shots, std::uint64_t seed);

}  // namespace qmatops

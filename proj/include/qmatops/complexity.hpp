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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmatops/tally.hpp"

namespace qmatops {

enum class Algorithm { kRowAdd, kRowSwap, kTrace, kTranspose };

std::string to_string(Algorithm algorithm);
/// Accepts "row-add", "row-swap", "trace", "transpose".
std::optional<Algorithm> parse_algorithm(const std::string& name);

enum class ClaimedOrder { kConstant, kLinear };

/// Which counter a claim is judged on.
enum class CountMetric { kToffoli, kSingleQubit, kSwaps };

std::string to_string(ClaimedOrder order);
std::string to_string(CountMetric metric);
std::uint64_t metric_value(const GateCounts& counts, CountMetric metric);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  /// Every point lies on one line (checked in integer arithmetic).
  bool exact = false;
};

/// Least-squares line through (x, y) plus an exact collinearity test.
LinearFit fit_line(std::span<const std::size_t> xs, std::span<const std::uint64_t> ys);

struct ComplexityClaim {
  std::string step;  // step label, or "total"
  ClaimedOrder order = ClaimedOrder::kLinear;
  std::string order_text;  // "O(1)", "O(n)", "O(m)"
  CountMetric metric = CountMetric::kToffoli;
  LinearFit fit;
  bool passed = false;
  std::string note;
};

struct ScalingReport {
  Algorithm algorithm = Algorithm::kRowAdd;
  std::vector<std::pair<std::size_t, GateTally>> series;  // sorted by width
  /// Toffoli-count fit for every tallied step label and "total".
  std::map<std::string, LinearFit> fits;
  std::vector<ComplexityClaim> claims;

  bool all_passed() const;
};

inline constexpr std::size_t kMaxScalingWidth = 12;

/// Qubits used by one run of `algorithm` at register width `width`.
std::size_t scaling_qubits(Algorithm algorithm, std::size_t width);

/// Runs the algorithm once per width on a seeded random matrix and judges
/// each annotated step. Row operations use 2^w x 2 inputs, trace and
/// transpose use 2^w x 2^w.
ScalingReport measure_scaling(Algorithm algorithm, std::span<const std::size_t> widths,
                              std::uint64_t seed = 1);

}  // namespace qmatops

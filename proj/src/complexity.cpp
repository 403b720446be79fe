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

#include "qmatops/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "qmatops/algorithms.hpp"
#include "qmatops/layout.hpp"
#include "qmatops/random.hpp"

namespace qmatops {

namespace {

struct ClaimSpec {
  std::string step;
  ClaimedOrder order;
  std::string order_text;
  CountMetric metric;
  std::string note;
};

std::vector<ClaimSpec> annotated_steps(Algorithm algorithm) {
  using enum ClaimedOrder;
  using enum CountMetric;
  switch (algorithm) {
    case Algorithm::kRowAdd:
      return {
          {"2", kLinear, "O(n)", kToffoli, "n-qubit control register"},
          {"3", kLinear, "O(n)", kToffoli, "n+1 control qubits"},
          {"5", kConstant, "O(1)", kToffoli, "two control qubits"},
          {"6", kConstant, "O(1)", kSingleQubit, "two Hadamard gates"},
          {"total", kLinear, "O(n)", kToffoli, ""},
      };
    case Algorithm::kRowSwap:
      return {
          {"2", kLinear, "O(n)", kToffoli, "n control qubits"},
          {"3", kLinear, "O(n)", kToffoli, "2n control qubits"},
          {"5", kConstant, "O(1)", kToffoli,
           "annotated with one control qubit; each of the three projectors conditions on "
           "B1 and both B2 qubits"},
          {"6", kConstant, "O(1)", kSingleQubit, "three Hadamard gates"},
          {"total", kLinear, "O(n)", kToffoli, ""},
      };
    case Algorithm::kTrace:
      return {
          {"2", kLinear, "O(n)", kToffoli, "2n control qubits"},
          {"3", kLinear, "O(n)", kToffoli, "n control qubits"},
          {"4", kLinear, "O(n)", kSingleQubit, "3n Hadamard gates"},
          {"5", kLinear, "O(n)", kToffoli, "3n+1 control qubits"},
          {"total", kLinear, "O(n)", kToffoli, ""},
      };
    case Algorithm::kTranspose:
      return {
          {"2", kLinear, "O(m)", kSwaps, "m qubit-pair swaps"},
      };
  }
  return {};
}

std::vector<std::uint64_t> series_of(const ScalingReport& r, const std::string& step,
                                     CountMetric metric) {
  std::vector<std::uint64_t> ys;
  for (const auto& [w, tally] : r.series) {
    if (step == "total") {
      ys.push_back(metric_value(tally.total, metric));
    } else {
      const auto it = tally.per_step.find(step);
      ys.push_back(it == tally.per_step.end() ? 0 : metric_value(it->second, metric));
    }
  }
  return ys;
}

ComplexityClaim judge(const ScalingReport& r, const std::vector<std::size_t>& xs,
                      const ClaimSpec& spec) {
  const auto ys = series_of(r, spec.step, spec.metric);
  ComplexityClaim c{spec.step, spec.order, spec.order_text, spec.metric, fit_line(xs, ys), false,
                    spec.note};
  if (spec.order == ClaimedOrder::kConstant) {
    c.passed = std::all_of(ys.begin(), ys.end(), [&](std::uint64_t y) { return y == ys.front(); });
  } else {
    c.passed = c.fit.exact && c.fit.slope > 0.0;
  }
  return c;
}

RunReport run_at_width(Algorithm algorithm, std::size_t w, std::mt19937_64& rng) {
  const std::size_t n = std::size_t{1} << w;
  switch (algorithm) {
    case Algorithm::kRowAdd:
      return run_row_add(encode_matrix(random_complex_matrix(rng, n, 2)), n - 1, 0);
    case Algorithm::kRowSwap:
      return run_row_swap(encode_matrix(random_complex_matrix(rng, n, 2)), n - 1, 0);
    case Algorithm::kTrace:
      return run_trace(encode_matrix(random_complex_matrix(rng, n, n)));
    case Algorithm::kTranspose:
      return run_transpose(encode_matrix(random_complex_matrix(rng, n, n)));
  }
  throw PreconditionError("unknown algorithm");
}

}  // namespace

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRowAdd:
      return "row-add";
    case Algorithm::kRowSwap:
      return "row-swap";
    case Algorithm::kTrace:
      return "trace";
    case Algorithm::kTranspose:
      return "transpose";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (const auto a :
       {Algorithm::kRowAdd, Algorithm::kRowSwap, Algorithm::kTrace, Algorithm::kTranspose}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::string to_string(ClaimedOrder order) {
  return order == ClaimedOrder::kConstant ? "constant" : "linear";
}

std::string to_string(CountMetric metric) {
  switch (metric) {
    case CountMetric::kToffoli:
      return "toffoli";
    case CountMetric::kSingleQubit:
      return "single_qubit";
    case CountMetric::kSwaps:
      return "swaps";
  }
  return "?";
}

std::uint64_t metric_value(const GateCounts& counts, CountMetric metric) {
  switch (metric) {
    case CountMetric::kToffoli:
      return counts.toffoli;
    case CountMetric::kSingleQubit:
      return counts.single_qubit;
    case CountMetric::kSwaps:
      return counts.swaps;
  }
  return 0;
}

LinearFit fit_line(std::span<const std::size_t> xs, std::span<const std::uint64_t> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw PreconditionError("a line fit needs at least two (x, y) pairs");
  }
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto x = static_cast<double>(xs[i]);
    const auto y = static_cast<double>(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw PreconditionError("a line fit needs two distinct widths");

  LinearFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = static_cast<double>(ys[i]) - (f.slope * static_cast<double>(xs[i]) + f.intercept);
    f.max_residual = std::max(f.max_residual, std::abs(r));
  }

  // Collinearity against the first two distinct x values, no rounding.
  std::size_t second = 1;
  while (xs[second] == xs[0]) ++second;
  const auto dx = static_cast<std::int64_t>(xs[second]) - static_cast<std::int64_t>(xs[0]);
  const auto dy = static_cast<std::int64_t>(ys[second]) - static_cast<std::int64_t>(ys[0]);
  f.exact = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto xi = static_cast<std::int64_t>(xs[i]) - static_cast<std::int64_t>(xs[0]);
    const auto yi = static_cast<std::int64_t>(ys[i]) - static_cast<std::int64_t>(ys[0]);
    if (yi * dx != dy * xi) f.exact = false;
  }
  return f;
}

bool ScalingReport::all_passed() const {
  return !claims.empty() &&
         std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed; });
}

std::size_t scaling_qubits(Algorithm algorithm, std::size_t width) {
  switch (algorithm) {
    case Algorithm::kRowAdd:
      return 2 * width + 1 + 3;  // R1 C1(1) R2 B1 B2 B3
    case Algorithm::kRowSwap:
      return 3 * width + 1 + 4;  // R1 C1(1) R2 C2 B1 B2(2) B3
    case Algorithm::kTrace:
      return 3 * width + 2;
    case Algorithm::kTranspose:
      return 3 * width;
  }
  return 0;
}

ScalingReport measure_scaling(Algorithm algorithm, std::span<const std::size_t> widths,
                              std::uint64_t seed) {
  const std::set<std::size_t> sorted(widths.begin(), widths.end());
  if (sorted.size() < 2) throw PreconditionError("scaling needs at least two distinct widths");
  for (const std::size_t w : sorted) {
    if (w < 1 || w > kMaxScalingWidth) {
      throw PreconditionError("width " + std::to_string(w) + " outside 1.." +
                              std::to_string(kMaxScalingWidth));
    }
    if (scaling_qubits(algorithm, w) > RegisterLayout::kMaxQubits) {
      throw PreconditionError("width " + std::to_string(w) + " needs " +
                              std::to_string(scaling_qubits(algorithm, w)) + " qubits, above " +
                              std::to_string(RegisterLayout::kMaxQubits));
    }
  }

  ScalingReport report;
  report.algorithm = algorithm;
  std::mt19937_64 rng(seed);
  for (const std::size_t w : sorted) {
    report.series.emplace_back(w, run_at_width(algorithm, w, rng).gate_tally);
  }

  const std::vector<std::size_t> xs(sorted.begin(), sorted.end());
  std::set<std::string> labels{"total"};
  for (const auto& [w, tally] : report.series) {
    for (const auto& [label, counts] : tally.per_step) labels.insert(label);
  }
  for (const auto& label : labels) {
    report.fits[label] = fit_line(xs, series_of(report, label, CountMetric::kToffoli));
  }

  for (const auto& spec : annotated_steps(algorithm)) {
    report.claims.push_back(judge(report, xs, spec));
  }

  if (algorithm == Algorithm::kRowSwap) {
    // Both controlled register exchanges act on n qubit pairs under one control.
    ComplexityClaim c = judge(report, xs, {"4a", ClaimedOrder::kLinear, "O(n)",
                                           CountMetric::kToffoli, "matches 4b"});
    const LinearFit& b = report.fits.at("4b");
    c.passed = c.passed && b.exact && c.fit.slope == b.slope;
    report.claims.push_back(c);
  }
  if (algorithm == Algorithm::kTranspose) {
    ComplexityClaim c = judge(report, xs, {"total", ClaimedOrder::kConstant, "O(1)",
                                           CountMetric::kToffoli, "no Toffoli gates at all"});
    const auto ys = series_of(report, "total", CountMetric::kToffoli);
    c.passed = c.passed && ys.front() == 0;
    report.claims.push_back(c);
  }
  return report;
}

}  // namespace qmatops

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

#include <gtest/gtest.h>

#include <vector>

#include "qmatops/complexity.hpp"

using namespace qmatops;

namespace {

const ComplexityClaim& claim(const ScalingReport& r, const std::string& step) {
  for (const auto& c : r.claims) {
    if (c.step == step) return c;
  }
  throw std::runtime_error("no claim for step " + step);
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t w = lo; w <= hi; ++w) v.push_back(w);
  return v;
}

}  // namespace

TEST(FitLine, ExactAndInexact) {
  const std::vector<std::size_t> xs{1, 2, 3, 4};
  const LinearFit line = fit_line(xs, std::vector<std::uint64_t>{5, 8, 11, 14});
  EXPECT_TRUE(line.exact);
  EXPECT_NEAR(line.slope, 3.0, 1e-12);
  EXPECT_NEAR(line.intercept, 2.0, 1e-12);

  const LinearFit flat = fit_line(xs, std::vector<std::uint64_t>{7, 7, 7, 7});
  EXPECT_TRUE(flat.exact);
  EXPECT_EQ(flat.slope, 0.0);

  const LinearFit bent = fit_line(xs, std::vector<std::uint64_t>{0, 1, 3, 6});
  EXPECT_FALSE(bent.exact);
  EXPECT_GT(bent.max_residual, 0.0);
}

TEST(FitLine, Rejections) {
  EXPECT_THROW(fit_line(std::vector<std::size_t>{1}, std::vector<std::uint64_t>{1}),
               PreconditionError);
  EXPECT_THROW(fit_line(std::vector<std::size_t>{2, 2}, std::vector<std::uint64_t>{1, 1}),
               PreconditionError);
  EXPECT_THROW(fit_line(std::vector<std::size_t>{1, 2}, std::vector<std::uint64_t>{1}),
               PreconditionError);
}

TEST(Scaling, RowAddClaims) {
  const auto widths = range(2, 5);
  const ScalingReport r = measure_scaling(Algorithm::kRowAdd, widths);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.claims.size(), 5u);
  EXPECT_EQ(claim(r, "5").order_text, "O(1)");
  EXPECT_GT(claim(r, "2").fit.slope, 0.0);
  EXPECT_EQ(r.series.size(), 4u);
}

TEST(Scaling, RowSwapClaimsIncludeBothExchanges) {
  const auto widths = range(2, 5);
  const ScalingReport r = measure_scaling(Algorithm::kRowSwap, widths);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(claim(r, "4a").fit.slope, r.fits.at("4b").slope);
  EXPECT_FALSE(claim(r, "5").note.empty());
}

TEST(Scaling, TraceClaims) {
  const auto widths = range(1, 3);
  const ScalingReport r = measure_scaling(Algorithm::kTrace, widths);
  EXPECT_TRUE(r.all_passed());
  for (const auto& [w, tally] : r.series) EXPECT_EQ(tally.per_step.at("4").single_qubit, 3 * w);
}

TEST(Scaling, TransposeIsSwapsOnly) {
  const auto widths = range(1, 6);
  const ScalingReport r = measure_scaling(Algorithm::kTranspose, widths);
  EXPECT_TRUE(r.all_passed());
  for (const auto& [w, tally] : r.series) {
    EXPECT_EQ(tally.total.swaps, w);
    EXPECT_EQ(tally.total.toffoli, 0u);
  }
}

TEST(Scaling, Rejections) {
  EXPECT_THROW(measure_scaling(Algorithm::kRowAdd, std::vector<std::size_t>{3}), PreconditionError);
  EXPECT_THROW(measure_scaling(Algorithm::kRowAdd, std::vector<std::size_t>{3, 3}),
               PreconditionError);
  EXPECT_THROW(measure_scaling(Algorithm::kRowAdd, std::vector<std::size_t>{0, 2}),
               PreconditionError);
  // Trace at width 9 needs 29 qubits.
  EXPECT_THROW(measure_scaling(Algorithm::kTrace, std::vector<std::size_t>{1, 9}),
               PreconditionError);
  EXPECT_EQ(scaling_qubits(Algorithm::kTrace, 3), 11u);
}

TEST(Scaling, ParseAlgorithm) {
  for (const Algorithm a :
       {Algorithm::kRowAdd, Algorithm::kRowSwap, Algorithm::kTrace, Algorithm::kTranspose}) {
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  EXPECT_FALSE(parse_algorithm("determinant").has_value());
}

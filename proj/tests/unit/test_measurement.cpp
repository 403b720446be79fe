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

#include <cmath>
#include <random>

#include "qmatops/algorithms.hpp"
#include "qmatops/appendix.hpp"
#include "qmatops/measurement.hpp"
#include "qmatops/random.hpp"

using namespace qmatops;

TEST(PostSelect, BasisStateIsCertain) {
  const RegisterLayout layout({{"A", 2}, {"B", 1}});
  const StateVector s = StateVector::basis_state(layout, layout.compose({{"A", 2}, {"B", 1}}));
  EXPECT_EQ(post_select(s, {{"A", 2}, {"B", 1}}).probability, 1.0);
  const PostSelection miss = post_select(s, {{"A", 1}, {"B", 1}});
  EXPECT_EQ(miss.probability, 0.0);
  EXPECT_FALSE(miss.renormalized_state.has_value());
}

TEST(PostSelect, UniformTwoQubits) {
  const StateVector s(RegisterLayout({{"q0", 1}, {"q1", 1}}), {0.5, 0.5, 0.5, 0.5});
  const PostSelection p = post_select(s, {{"q0", 0}});
  EXPECT_NEAR(p.probability, 0.5, 1e-15);
  ASSERT_TRUE(p.renormalized_state.has_value());
  EXPECT_NEAR(p.renormalized_state->norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(p.renormalized_state->amplitude(2), Complex{});
}

TEST(PostSelect, RowSwapFinalPattern) {
  const auto enc = encode_matrix(appendix::worked_matrix());
  const RunReport r = run_row_swap(enc, 3, 1, {.record_states = true});
  const PostSelection p = post_select(r.states.at(5), {{"B1", 0}, {"B2", 0}, {"B3", 1}});
  EXPECT_NEAR(p.probability, 1.0 / 24.0, 1e-12);
}

TEST(PostSelect, CompletenessOverAllPatterns) {
  std::mt19937_64 rng(31);
  const RegisterLayout layout({{"X", 3}, {"P", 2}, {"Q", 1}});
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix m = random_complex_matrix(rng, layout.dimension(), 1);
    std::vector<Complex> amps(m.data().begin(), m.data().end());
    double n2 = 0;
    for (const auto& a : amps) n2 += std::norm(a);
    for (auto& a : amps) a /= std::sqrt(n2);
    const StateVector s(layout, amps);
    double total = 0;
    for (BasisIndex p = 0; p < 4; ++p) {
      for (BasisIndex q = 0; q < 2; ++q) total += post_select(s, {{"P", p}, {"Q", q}}).probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(PostSelect, EmptyPatternKeepsStateBitForBit) {
  std::mt19937_64 rng(32);
  const auto enc = encode_matrix(random_complex_matrix(rng, 4, 4));
  const StateVector s = matrix_state(enc, "R", "C");
  const PostSelection p = post_select(s, {});
  EXPECT_EQ(p.probability, 1.0);
  for (BasisIndex i = 0; i < s.size(); ++i) {
    EXPECT_EQ(p.renormalized_state->amplitude(i), s.amplitude(i));
  }
}

TEST(Sampling, SeededAndConsistent) {
  const StateVector s(RegisterLayout({{"q0", 1}, {"q1", 1}}),
                      {std::sqrt(0.2), std::sqrt(0.3), std::sqrt(0.1), std::sqrt(0.4)});
  const auto a = sample_post_selection(s, {{"q0", 1}}, 200000, 5);
  const auto b = sample_post_selection(s, {{"q0", 1}}, 200000, 5);
  EXPECT_EQ(a.accepted, b.accepted);
  // p = 0.5; five standard deviations of the binomial frequency.
  EXPECT_NEAR(a.frequency, 0.5, 5 * std::sqrt(0.25 / 200000));
  EXPECT_EQ(sample_post_selection(s, {{"q0", 1}}, 0, 5).frequency, 0.0);
}

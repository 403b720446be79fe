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

#include "bridge.hpp"
#include "qmatops/oracle.hpp"
#include "qmatops/random.hpp"
#include "reference.hpp"

using namespace qmatops;

namespace {
const double kH = 1.0 / std::sqrt(2.0);
}

TEST(Oracle, RowAddExamples) {
  const auto o = oracle::oracle_row_add(ComplexMatrix::from_rows({{kH, 0}, {0, kH}}), 0, 1);
  EXPECT_NEAR(o.normalization_g * o.normalization_g, 1.5, 1e-15);
  EXPECT_NEAR(o.predicted_probability, 3.0 / 16.0, 1e-15);
  const auto z = oracle::oracle_row_add(ComplexMatrix::from_rows({{kH, 0}, {-kH, 0}}), 0, 1);
  EXPECT_NEAR(z.predicted_probability, 1.0 / 16.0, 1e-15);
  EXPECT_THROW(oracle::oracle_row_add(ComplexMatrix::from_rows({{1, 0}, {0, 1}}), 0, 0),
               PreconditionError);
}

TEST(Oracle, AgreesWithElementaryMatrixProducts) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) {
    const ref::Mat a = ref::normalized(ref::random_mat(rng, 8, 4));
    const std::size_t k = rng() % 8, l = (k + 3) % 8;
    const auto add = oracle::oracle_row_add(bridge::to_lib(a), k, l);
    const ref::Mat want = ref::row_added(a, k, l);
    EXPECT_LE(bridge::max_diff(add.matrix, want), 1e-14);
    EXPECT_NEAR(add.normalization_g * add.normalization_g, ref::frob2(want), 1e-12);
    EXPECT_TRUE(bridge::exactly_equal(oracle::oracle_row_swap(bridge::to_lib(a), k, l).matrix,
                                      ref::row_swapped(a, k, l)));
    EXPECT_TRUE(
        bridge::exactly_equal(oracle::oracle_transpose(bridge::to_lib(a)).matrix, ref::transposed(a)));
  }
}

TEST(Oracle, TraceExamples) {
  const auto id = oracle::oracle_trace(ComplexMatrix::from_rows({{kH, 0}, {0, kH}}));
  EXPECT_NEAR(std::abs(id.scalar - std::sqrt(2.0)), 0, 1e-15);
  EXPECT_NEAR(id.predicted_probability, 0.25, 1e-15);
  EXPECT_EQ(oracle::oracle_trace(ComplexMatrix::from_rows({{0, kH}, {kH, 0}})).scalar, Complex{});
  EXPECT_THROW(oracle::oracle_trace(ComplexMatrix(2, 4)), PreconditionError);

  std::mt19937_64 rng(52);
  const ref::Mat a = ref::random_mat(rng, 8, 8);
  EXPECT_NEAR(std::abs(oracle::oracle_trace(bridge::to_lib(a)).scalar - ref::trace(a)), 0, 1e-12);
}

TEST(Oracle, DenseControlledNot) {
  const RegisterLayout layout({{"C", 1}, {"T", 1}});
  const ComplexMatrix u =
      oracle::dense_unitary_of(ControlledOp{Projector().on_register("C", 1), FlipQubit{{"T", 0}}},
                               layout);
  const ComplexMatrix cnot =
      ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  EXPECT_EQ(u, cnot);
  EXPECT_EQ(oracle::unitarity_defect(u), 0.0);
}

TEST(Oracle, IdentityProjectorFlip) {
  const RegisterLayout layout({{"A", 2}, {"T", 1}});
  const ComplexMatrix u =
      oracle::dense_unitary_of(ControlledOp{Projector(), FlipQubit{{"T", 0}}}, layout);
  for (BasisIndex c = 0; c < 8; ++c) {
    for (BasisIndex r = 0; r < 8; ++r) EXPECT_EQ(u(r, c), r == (c ^ 1U) ? Complex(1) : Complex{});
  }
}

TEST(Oracle, ThreeControlMcx) {
  const ComplexMatrix u = oracle::mcx_unitary(3, {true, false, true});
  ASSERT_EQ(u.rows(), 16u);
  // Fires on controls 101 only: basis 1010 <-> 1011.
  for (BasisIndex c = 0; c < 16; ++c) {
    const BasisIndex r = (c >> 1) == 0b101 ? c ^ 1U : c;
    EXPECT_EQ(u(r, c), Complex(1));
  }
  EXPECT_EQ(oracle::unitarity_defect(u), 0.0);
}

TEST(Oracle, NetworkEvaluation) {
  const GateNetwork net = decompose_mcx(3);
  // Inputs are data bits followed by clean work bits.
  const std::size_t w = net.num_work;
  EXPECT_EQ(oracle::evaluate_network(net, 0b1110u << w), 0b1111u << w);
  EXPECT_EQ(oracle::evaluate_network(net, 0b1100u << w), 0b1100u << w);
}

TEST(Oracle, DenseSizeCap) {
  const RegisterLayout big({{"A", 6}, {"B", 6}, {"T", 1}});
  EXPECT_THROW(oracle::dense_unitary_of(ControlledOp{Projector(), FlipQubit{{"T", 0}}}, big),
               PreconditionError);
  EXPECT_THROW(oracle::mcx_unitary(12), PreconditionError);
}

TEST(Oracle, UnitarityDefectDetectsNonUnitary) {
  EXPECT_NEAR(oracle::unitarity_defect(ComplexMatrix::from_rows({{1, 1}, {0, 1}})), 1.0, 1e-15);
  EXPECT_THROW(oracle::unitarity_defect(ComplexMatrix(2, 3)), PreconditionError);
}

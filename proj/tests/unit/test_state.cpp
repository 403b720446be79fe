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
#include <limits>
#include <random>

#include "bridge.hpp"
#include "qmatops/appendix.hpp"
#include "qmatops/layout.hpp"
#include "qmatops/state.hpp"
#include "reference.hpp"

using namespace qmatops;

TEST(Layout, MostSignificantRegisterFirst) {
  const RegisterLayout layout({{"R", 2}, {"C", 3}});
  EXPECT_EQ(layout.total_qubits(), 5u);
  EXPECT_EQ(layout.compose({{"R", 2}, {"C", 5}}), 2u * 8 + 5);
  EXPECT_EQ(layout.register_value(21, "R"), 2u);
  EXPECT_EQ(layout.register_value(21, "C"), 5u);
  EXPECT_EQ(layout.global_qubit({"C", 0}), 2u);
  EXPECT_EQ(layout.bit_mask(0), 16u);
  EXPECT_EQ(layout.basis_label(21), "|10>_R|101>_C");
}

TEST(Layout, RejectsBadRegisters) {
  EXPECT_THROW(RegisterLayout({{"R", 1}, {"R", 2}}), PreconditionError);
  EXPECT_THROW(RegisterLayout({{"R", 0}}), PreconditionError);
  EXPECT_THROW(RegisterLayout({{"R", 20}, {"C", 7}}), PreconditionError);
  const RegisterLayout layout({{"R", 2}});
  EXPECT_THROW(layout.with_register_value(0, "R", 4), PreconditionError);
  EXPECT_THROW(layout.width("X"), PreconditionError);
}

TEST(Encode, WorkedMatrixIsAutoNormalized) {
  // Squared entries of the worked 4x4 example, summed by hand in 1/256 units:
  // rows give 35, 72, 65 and 86, i.e. 258/256.
  const EncodedMatrix e = encode_matrix(appendix::worked_matrix());
  EXPECT_NEAR(e.frobenius_scale, std::sqrt(258.0 / 256.0), 1e-15);
  EXPECT_EQ(e.rows(), 4u);
  EXPECT_NEAR(e.entries.frobenius_norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(e.entries(3, 3).real(), 0.5 / std::sqrt(258.0 / 256.0), 1e-15);
}

TEST(Encode, UnitNormInputKeepsScaleOne) {
  const EncodedMatrix e = encode_matrix(ComplexMatrix::from_rows({{1, 0}, {0, 0}}));
  EXPECT_EQ(e.frobenius_scale, 1.0);
  EXPECT_EQ(e.entries, ComplexMatrix::from_rows({{1, 0}, {0, 0}}));
}

TEST(Encode, PadsToPowersOfTwo) {
  const EncodedMatrix e = encode_matrix(ComplexMatrix::from_rows({{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_EQ(e.rows(), 4u);
  EXPECT_EQ(e.cols(), 2u);
  EXPECT_EQ(e.original_rows, 3u);
  EXPECT_NEAR(e.frobenius_scale, std::sqrt(6.0), 1e-15);
  EXPECT_EQ(e.entries(3, 0), Complex{});
  EXPECT_EQ(e.entries(3, 1), Complex{});
  EXPECT_EQ(e.row_qubits(), 2u);
  EXPECT_EQ(e.col_qubits(), 1u);

  // A single entry still gets a one-qubit register per side.
  const EncodedMatrix one = encode_matrix(ComplexMatrix::from_rows({{3}}));
  EXPECT_EQ(one.rows(), 2u);
  EXPECT_EQ(one.cols(), 2u);
}

TEST(Encode, RejectsZeroAndNonFinite) {
  EXPECT_THROW(encode_matrix(ComplexMatrix(2, 2)), PreconditionError);
  ComplexMatrix bad = ComplexMatrix::from_rows({{1, 0}, {0, 1}});
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(encode_matrix(bad), PreconditionError);
  EXPECT_THROW(encode_matrix(ComplexMatrix()), PreconditionError);
}

TEST(ProductState, IdentityTimesPlus) {
  const double h = 1.0 / std::sqrt(2.0);
  const StateVector psi1 = matrix_state(encode_matrix(ComplexMatrix::from_rows({{1, 0}, {0, 1}})),
                                        "R", "C");
  const auto amps1 = psi1.amplitudes();
  const StateVector s = prepare_product_state(
      {ProductPart{psi1.layout(), {amps1.begin(), amps1.end()}},
       ProductPart{RegisterLayout({{"Q", 1}}), {h, h}}});
  ASSERT_EQ(s.size(), 8u);
  int half = 0;
  for (const Complex a : s.amplitudes()) {
    if (std::abs(std::abs(a) - 0.5) < 1e-15) ++half;
    else EXPECT_EQ(a, Complex{});
  }
  EXPECT_EQ(half, 4);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(ProductState, SingleZeroPart) {
  const StateVector s = prepare_product_state({zero_part("B", 1)});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.amplitude(0), Complex(1.0));
  EXPECT_EQ(s.amplitude(1), Complex{});
}

TEST(ProductState, RejectsUnnormalizedPart) {
  EXPECT_THROW(prepare_product_state({ProductPart{RegisterLayout({{"Q", 1}}), {1.0, 1.0}}}),
               PreconditionError);
  EXPECT_THROW(prepare_product_state({zero_part("Q", 1), zero_part("Q", 1)}), PreconditionError);
}

TEST(ProductState, WorkedExampleInitialState) {
  // Three equally weighted copies of the matrix state, on (R2, C2) =
  // (l, k), (k, k) and (l, l).
  const EncodedMatrix a = encode_matrix(appendix::worked_matrix());
  const auto z = AncillaVector::make(AncillaVector::Kind::kRowSwap, 4, 3, 1);
  const StateVector m = matrix_state(a, "R1", "C1");
  const auto ma = m.amplitudes();
  const StateVector s = prepare_product_state(
      {ProductPart{m.layout(), {ma.begin(), ma.end()}},
       ProductPart{RegisterLayout({{"R2", 2}, {"C2", 2}}), z.amplitudes()}});
  for (const auto& [r2, c2] : {std::pair{1, 3}, {3, 3}, {1, 1}}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const Complex got = s.amplitude(RegisterValues{
            {"R1", i}, {"C1", j}, {"R2", BasisIndex(r2)}, {"C2", BasisIndex(c2)}});
        EXPECT_NEAR(std::abs(got - a.entries(i, j) / std::sqrt(3.0)), 0.0, 1e-15);
      }
    }
  }
  EXPECT_EQ(s.amplitude(RegisterValues{{"R2", 3}, {"C2", 1}}), Complex{});
}

TEST(Ancilla, Validation) {
  using K = AncillaVector::Kind;
  EXPECT_THROW(AncillaVector::make(K::kRowAdd, 4, 2, 2), PreconditionError);
  EXPECT_THROW(AncillaVector::make(K::kRowSwap, 4, 4, 1), PreconditionError);
  const auto add = AncillaVector::make(K::kRowAdd, 4, 3, 0).amplitudes();
  EXPECT_NEAR(add[3].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(add[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(add[1], Complex{});
  const auto swap = AncillaVector::make(K::kRowSwap, 4, 3, 1).amplitudes();
  ASSERT_EQ(swap.size(), 16u);
  for (const std::size_t idx : {1 * 4 + 3, 3 * 4 + 3, 1 * 4 + 1}) {
    EXPECT_NEAR(swap[idx].real(), 1 / std::sqrt(3.0), 1e-15);
  }
}

TEST(Decode, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (std::size_t r : {1u, 2u, 3u, 5u, 8u}) {
    for (std::size_t c : {2u, 4u, 7u, 8u}) {
      const ref::Mat a = ref::random_mat(rng, r, c);
      const EncodedMatrix e = encode_matrix(bridge::to_lib(a));
      const ComplexMatrix back = decode_matrix(matrix_state(e, "R", "C"), "R", "C");
      EXPECT_LE(bridge::max_diff(back, ref::padded(ref::normalized(a))), 1e-12);
    }
  }
}

TEST(Decode, PaddingNeutrality) {
  std::mt19937_64 rng(12);
  const ref::Mat a = ref::random_mat(rng, 3, 5);
  const EncodedMatrix e = encode_matrix(bridge::to_lib(a));
  const ComplexMatrix back = decode_matrix(matrix_state(e, "R", "C"), "R", "C").block(3, 5);
  const ref::C ratio = a[0][0] / back(0, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_LE(std::abs(a[i][j] / back(i, j) - ratio), 1e-12);
  }
}

TEST(Decode, RejectsMassOutsidePinnedSubspace) {
  const double h = 1.0 / std::sqrt(2.0);
  const StateVector s(RegisterLayout({{"R", 1}, {"C", 1}, {"B", 1}}),
                      {h, 0, 0, 0, 0, 0, 0, h});
  EXPECT_THROW(decode_matrix(s, "R", "C", {{"B", 0}}), PreconditionError);
  EXPECT_THROW(decode_matrix(s, "R", "C"), PreconditionError);  // B left unpinned
}

TEST(StateVector, RegisterLookupAndChecksum) {
  const StateVector s = StateVector::basis_state(RegisterLayout({{"A", 2}, {"B", 1}}), 5);
  EXPECT_EQ(s.amplitude(RegisterValues{{"A", 2}, {"B", 1}}), Complex(1.0));
  EXPECT_EQ(state_checksum(s), 6.0);
  EXPECT_THROW(StateVector(RegisterLayout({{"A", 1}}), {1.0}), PreconditionError);
}

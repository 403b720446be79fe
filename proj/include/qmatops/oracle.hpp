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

// Classical reference results. Nothing in here calls into the simulator; the
// index arithmetic is deliberately naive and self-contained.

#pragma once

#include <cstddef>
#include <vector>

#include "qmatops/gates.hpp"
#include "qmatops/layout.hpp"
#include "qmatops/matrix.hpp"
#include "qmatops/mcx.hpp"

namespace qmatops::oracle {

struct OracleResult {
  ComplexMatrix matrix;  // row ops and transpose
  Complex scalar{};      // trace
  double normalization_g = 0.0;  // row addition only
  double predicted_probability = 0.0;
};

/// Row l += row k, not renormalized; G is the Frobenius norm of the result.
OracleResult oracle_row_add(const ComplexMatrix& a, std::size_t k, std::size_t l);
OracleResult oracle_row_swap(const ComplexMatrix& a, std::size_t k, std::size_t l);
/// Expects a square matrix with a power-of-two dimension.
OracleResult oracle_trace(const ComplexMatrix& s);
OracleResult oracle_transpose(const ComplexMatrix& s);

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Explicit 2^q x 2^q matrix of P (x) U + (I - P) (x) I on `layout`.
ComplexMatrix dense_unitary_of(const ControlledOp& op, const RegisterLayout& layout);

/// Explicit matrix of a gate network, built as the ordered product of the
/// per-gate matrices. Qubit 0 is the most significant bit.
ComplexMatrix dense_unitary_of(const GateNetwork& network);

/// Direct multi-controlled X on num_controls + 1 qubits (target last).
ComplexMatrix mcx_unitary(std::size_t num_controls, const std::vector<bool>& polarity = {});

/// Classical bit-level evaluation of a network on one basis state.
BasisIndex evaluate_network(const GateNetwork& network, BasisIndex input);

/// max |(U^dagger U - I)_ij|.
double unitarity_defect(const ComplexMatrix& u);

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qmatops::oracle

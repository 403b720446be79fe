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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmatops/circuit.hpp"
#include "qmatops/measurement.hpp"
#include "qmatops/state.hpp"
#include "qmatops/tally.hpp"

namespace qmatops {

/// A circuit ready to run: its input state, the ancilla pattern that accepts
/// the result, and how to read the result back out.
struct PreparedCircuit {
  std::string algorithm;
  Circuit circuit;
  StateVector initial;
  RegisterValues accept;
  // Registers enumerating output rows and columns, and the values every
  // other register holds in the accepted branch.
  std::string row_register;
  std::string col_register;
  RegisterValues readout_fixed;
};

// Register layouts:
//   row addition  R1(n) C1(m) R2(n) B1 B2 B3
//   row swap      R1(n) C1(m) R2(n) C2(n) B1 B2(2) B3
//   trace         R(n) C(n) A(n) B1 B2
//   transpose     D(m) R(n) C(m)
//   square transp R(p) C(p), p = max(n, m)
PreparedCircuit prepare_row_add(const EncodedMatrix& a, std::size_t k, std::size_t l);
PreparedCircuit prepare_row_swap(const EncodedMatrix& a, std::size_t k, std::size_t l);
PreparedCircuit prepare_trace(const EncodedMatrix& s);
PreparedCircuit prepare_transpose(const EncodedMatrix& s);
PreparedCircuit prepare_transpose_square(const EncodedMatrix& s);

struct RunOptions {
  /// Keep |Phi_0> ... |Phi_last> (including the post-selected state).
  bool record_states = false;
};

struct RunReport {
  std::string algorithm;
  RegisterLayout layout;
  /// Decoded post-selected result; absent on a zero-probability outcome and
  /// for the trace algorithm.
  std::optional<ComplexMatrix> output_matrix;
  /// output_matrix * output_scale is the operation applied to the encoded
  /// matrix: G for row addition, 1 elsewhere.
  double output_scale = 1.0;
  /// Trace recovered from the |0>_R|0>_C|0>_A|1>_B1|1>_B2 amplitude.
  std::optional<Complex> trace;
  double success_probability = 0.0;
  double predicted_probability = 0.0;
  RegisterValues accepted_pattern;
  GateTally gate_tally;
  std::vector<StepRecord> steps;
  std::vector<StateVector> states;
  /// Named internal consistency checks evaluated during the run.
  std::vector<std::pair<std::string, bool>> checks;
};

/// Adds row k to row l. The output is the row-added matrix divided by G, with
/// G^2 = sum_{i != l} |a_i|^2 + |a_k + a_l|^2; success probability G^2 / 8.
RunReport run_row_add(const EncodedMatrix& a, std::size_t k, std::size_t l,
                      const RunOptions& options = {});

/// Exchanges rows k and l; success probability 1/24.
RunReport run_row_swap(const EncodedMatrix& a, std::size_t k, std::size_t l,
                       const RunOptions& options = {});

/// Rejects non-square input. Success probability |tr|^2 / 2^(3n).
RunReport run_trace(const EncodedMatrix& s, const RunOptions& options = {});

/// M x N output read from registers D (rows) and R (columns).
RunReport run_transpose(const EncodedMatrix& s, const RunOptions& options = {});

/// Pads to square, swaps R and C, and strips the padding again.
RunReport run_transpose_square(const EncodedMatrix& s, const RunOptions& options = {});

/// Closed forms evaluated directly on the encoded entries.
double row_add_normalization_squared(const EncodedMatrix& a, std::size_t k, std::size_t l);
double predicted_trace_probability(const EncodedMatrix& s);

}  // namespace qmatops

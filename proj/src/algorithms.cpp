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

#include "qmatops/algorithms.hpp"

#include <cmath>

namespace qmatops {

namespace {

ControlledOp flip(Projector p, std::string reg, std::size_t qubit = 0) {
  return ControlledOp{std::move(p), FlipQubit{QubitRef{std::move(reg), qubit}}};
}

ControlledOp controlled_swap(Projector p, std::string a, std::string b) {
  return ControlledOp{std::move(p), SwapRegisters{std::move(a), std::move(b)}};
}

ProductPart matrix_part(const EncodedMatrix& m, const std::string& row, const std::string& col) {
  const StateVector s = matrix_state(m, row, col);
  const auto amps = s.amplitudes();
  return ProductPart{s.layout(), std::vector<Complex>(amps.begin(), amps.end())};
}

PreparedCircuit start(std::string algorithm, StateVector initial) {
  return PreparedCircuit{std::move(algorithm), Circuit{}, std::move(initial), {}, {}, {}, {}};
}

RunReport execute(const PreparedCircuit& prepared, const RunOptions& options,
                  double predicted, bool keep_history = false) {
  RunReport report;
  report.algorithm = prepared.algorithm;
  report.layout = prepared.circuit.layout;
  report.predicted_probability = predicted;
  report.accepted_pattern = prepared.accept;
  report.gate_tally = tally_gates(prepared.circuit.applied_ops(), prepared.circuit.layout);

  CircuitRun run =
      run_circuit(prepared.circuit, prepared.initial, options.record_states || keep_history);
  report.steps = std::move(run.records);

  PostSelection selection = post_select(run.final_state, prepared.accept);
  report.success_probability = selection.probability;
  if (selection.renormalized_state && !prepared.row_register.empty()) {
    report.output_matrix = decode_matrix(*selection.renormalized_state, prepared.row_register,
                                         prepared.col_register, prepared.readout_fixed);
  }
  report.states = std::move(run.history);
  if (selection.renormalized_state && !report.states.empty()) {
    report.states.push_back(*selection.renormalized_state);
  }
  return report;
}

}  // namespace

double row_add_normalization_squared(const EncodedMatrix& a, std::size_t k, std::size_t l) {
  const ComplexMatrix& e = a.entries;
  double g2 = 0.0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    if (i == l) continue;
    for (std::size_t j = 0; j < e.cols(); ++j) g2 += std::norm(e(i, j));
  }
  for (std::size_t j = 0; j < e.cols(); ++j) g2 += std::norm(e(k, j) + e(l, j));
  return g2;
}

double predicted_trace_probability(const EncodedMatrix& s) {
  Complex tr = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i) tr += s.entries(i, i);
  return std::norm(tr) / std::pow(2.0, 3.0 * static_cast<double>(s.row_qubits()));
}

PreparedCircuit prepare_row_add(const EncodedMatrix& a, std::size_t k, std::size_t l) {
  const auto ancilla = AncillaVector::make(AncillaVector::Kind::kRowAdd, a.rows(), k, l);
  const std::size_t n = a.row_qubits();

  PreparedCircuit p = start("row-add", prepare_product_state({
                        matrix_part(a, "R1", "C1"),
                        ProductPart{RegisterLayout({{"R2", n}}), ancilla.amplitudes()},
                        zero_part("B1", 1),
                        zero_part("B2", 1),
                        zero_part("B3", 1),
                    }));
  Circuit& c = p.circuit;
  c.layout = p.initial.layout();

  c.add_step("2", "W(1)_R2B1").ops.push_back({flip(Projector().on_register("R2", k), "B1"), ""});
  c.add_step("3", "W(2)_R1B1B2")
      .ops.push_back({flip(Projector().on_register("R1", k).on_register("B1", 0), "B2"), ""});
  c.add_step("4", "W(3)_R1R2B2")
      .ops.push_back({controlled_swap(Projector().on_register("B2", 1), "R1", "R2"), ""});
  c.add_step("5", "W(4)_B1B2B3")
      .ops.push_back({flip(Projector().on_register("B1", 0).on_register("B2", 0), "B3"), ""});
  c.add_step("6", "W(5)_B1B2").ops.push_back({HadamardLayer{{"B1", "B2"}, {}}, ""});

  p.accept = {{"B1", 0}, {"B2", 0}, {"B3", 0}};
  p.row_register = "R1";
  p.col_register = "C1";
  p.readout_fixed = {{"R2", k}, {"B1", 0}, {"B2", 0}, {"B3", 0}};
  return p;
}

PreparedCircuit prepare_row_swap(const EncodedMatrix& a, std::size_t k, std::size_t l) {
  const auto ancilla = AncillaVector::make(AncillaVector::Kind::kRowSwap, a.rows(), k, l);
  const std::size_t n = a.row_qubits();

  PreparedCircuit p = start("row-swap", prepare_product_state({
                        matrix_part(a, "R1", "C1"),
                        ProductPart{RegisterLayout({{"R2", n}, {"C2", n}}), ancilla.amplitudes()},
                        zero_part("B1", 1),
                        zero_part("B2", 2),
                        zero_part("B3", 1),
                    }));
  Circuit& c = p.circuit;
  c.layout = p.initial.layout();

  c.add_step("2", "W(1)_R2C2B1")
      .ops.push_back({flip(Projector().on_register("R2", l).on_register("C2", k), "B1"), ""});

  // B2 qubit 0 tags row k of the |l>|l> branch, qubit 1 tags row l of |k>|k>.
  auto& separate = c.add_step("3", "W(2)_R1R2C2B2").ops;
  separate.push_back({flip(Projector().on_register("R1", k).on_register("R2", l), "B2", 0), ""});
  separate.push_back({flip(Projector().on_register("R1", l).on_register("C2", k), "B2", 1), ""});

  auto& exchange = c.add_step("4", "W(3)_R1R2C2B2").ops;
  exchange.push_back({controlled_swap(Projector().on_qubit("B2", 0, true), "R1", "C2"), "4a"});
  exchange.push_back({controlled_swap(Projector().on_qubit("B2", 1, true), "R1", "R2"), "4b"});

  // V(1) V(2) V(3): B1B2 in |100>, |001>, |010>.
  auto& label = c.add_step("5", "W(4)_B1B2B3").ops;
  for (const auto& [b1, b2] : {std::pair<BasisIndex, BasisIndex>{1, 0b00}, {0, 0b01}, {0, 0b10}}) {
    label.push_back({flip(Projector().on_register("B1", b1).on_register("B2", b2), "B3"), ""});
  }

  c.add_step("6", "W(5)_B1B2").ops.push_back({HadamardLayer{{"B1", "B2"}, {}}, ""});

  p.accept = {{"B1", 0}, {"B2", 0}, {"B3", 1}};
  p.row_register = "R1";
  p.col_register = "C1";
  p.readout_fixed = {{"R2", l}, {"C2", k}, {"B1", 0}, {"B2", 0}, {"B3", 1}};
  return p;
}

PreparedCircuit prepare_trace(const EncodedMatrix& s) {
  if (!s.is_square() || s.rows() != s.cols()) {
    throw PreconditionError("trace needs a square matrix, got " + std::to_string(s.original_rows) +
                            "x" + std::to_string(s.original_cols));
  }
  const std::size_t n = s.row_qubits();
  const BasisIndex all_ones = (BasisIndex{1} << n) - 1;

  PreparedCircuit p = start("trace", prepare_product_state({
                        matrix_part(s, "R", "C"),
                        zero_part("A", n),
                        zero_part("B1", 1),
                        zero_part("B2", 1),
                    }));
  Circuit& c = p.circuit;
  c.layout = p.initial.layout();

  // A_j flips when R_j == C_j: W_j^(0) for the 00 pattern, W_j^(1) for 11.
  auto& mark = c.add_step("2", "W(1)_RCA").ops;
  for (std::size_t j = 0; j < n; ++j) {
    for (const bool m : {false, true}) {
      mark.push_back({flip(Projector().on_qubit("R", j, m).on_qubit("C", j, m), "A", j), ""});
    }
  }
  c.add_step("3", "W(2)_AB1").ops.push_back({flip(Projector().on_register("A", all_ones), "B1"), ""});
  c.add_step("4", "W(3)_RCA").ops.push_back({HadamardLayer{{"R", "C", "A"}, {}}, ""});
  c.add_step("5", "W(4)_RCAB1B2")
      .ops.push_back({flip(Projector()
                               .on_register("R", 0)
                               .on_register("C", 0)
                               .on_register("A", 0)
                               .on_register("B1", 1),
                           "B2"),
                      ""});

  p.accept = {{"B2", 1}};
  return p;
}

PreparedCircuit prepare_transpose(const EncodedMatrix& s) {
  const std::size_t m = s.col_qubits();
  PreparedCircuit p = start("transpose", prepare_product_state({zero_part("D", m), matrix_part(s, "R", "C")}));
  Circuit& c = p.circuit;
  c.layout = p.initial.layout();
  c.add_step("2", "SWAP_DC").ops.push_back({RegisterSwap{"D", "C"}, ""});

  p.accept = {{"C", 0}};
  p.row_register = "D";
  p.col_register = "R";
  p.readout_fixed = {{"C", 0}};
  return p;
}

PreparedCircuit prepare_transpose_square(const EncodedMatrix& s) {
  const std::size_t side = std::max(s.rows(), s.cols());
  ComplexMatrix padded(side, side);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) padded(i, j) = s.entries(i, j);
  }
  const EncodedMatrix square{std::move(padded), s.original_rows, s.original_cols,
                             s.frobenius_scale};

  PreparedCircuit p = start("transpose-square", prepare_product_state({matrix_part(square, "R", "C")}));
  Circuit& c = p.circuit;
  c.layout = p.initial.layout();
  c.add_step("2", "SWAP_RC").ops.push_back({RegisterSwap{"R", "C"}, ""});

  p.row_register = "R";
  p.col_register = "C";
  return p;
}

RunReport run_row_add(const EncodedMatrix& a, std::size_t k, std::size_t l,
                      const RunOptions& options) {
  const PreparedCircuit p = prepare_row_add(a, k, l);
  const double g2 = row_add_normalization_squared(a, k, l);
  RunReport report = execute(p, options, g2 / 8.0);
  report.output_scale = std::sqrt(g2);
  return report;
}

RunReport run_row_swap(const EncodedMatrix& a, std::size_t k, std::size_t l,
                       const RunOptions& options) {
  const PreparedCircuit p = prepare_row_swap(a, k, l);
  return execute(p, options, 1.0 / 24.0);
}

RunReport run_trace(const EncodedMatrix& s, const RunOptions& options) {
  const PreparedCircuit p = prepare_trace(s);
  RunReport report = execute(p, options, predicted_trace_probability(s), /*keep_history=*/true);

  const auto& layout = report.layout;
  const std::size_t n = s.row_qubits();
  const BasisIndex all_ones = (BasisIndex{1} << n) - 1;

  // |Phi_1>: A must hold the bitwise XNOR of R and C, hence |N-1> exactly
  // on the diagonal terms.
  const StateVector& marked = report.states.at(1);
  bool marking_exact = true;
  for (BasisIndex i = 0; i < marked.size(); ++i) {
    if (marked.amplitude(i) == Complex{}) continue;
    const BasisIndex r = layout.register_value(i, "R");
    const BasisIndex c = layout.register_value(i, "C");
    const BasisIndex a = layout.register_value(i, "A");
    if (a != (~(r ^ c) & all_ones) || (a == all_ones) != (r == c)) marking_exact = false;
  }
  report.checks.emplace_back("diagonal terms marked with |N-1>_A", marking_exact);

  // |Phi_4> is the state just before measurement.
  const StateVector& phi4 = report.states.at(p.circuit.steps.size());
  const Complex amp = phi4.amplitude(RegisterValues{{"B1", 1}, {"B2", 1}});
  report.trace = amp * std::pow(2.0, 1.5 * static_cast<double>(n));

  if (!options.record_states) report.states.clear();
  return report;
}

RunReport run_transpose(const EncodedMatrix& s, const RunOptions& options) {
  return execute(prepare_transpose(s), options, 1.0);
}

RunReport run_transpose_square(const EncodedMatrix& s, const RunOptions& options) {
  const PreparedCircuit p = prepare_transpose_square(s);
  // The swap is a pure relabeling; nothing is measured.
  RunReport report = execute(p, options, 1.0);
  if (report.output_matrix) report.output_matrix = report.output_matrix->block(s.cols(), s.rows());
  return report;
}

}  // namespace qmatops

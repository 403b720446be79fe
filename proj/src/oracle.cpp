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

#include "qmatops/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qmatops::oracle {

namespace {

// Bit strings as plain vectors, position 0 = most significant qubit.
using Bits = std::vector<int>;

Bits to_bits(BasisIndex v, std::size_t nq) {
  Bits b(nq);
  for (std::size_t q = 0; q < nq; ++q) b[q] = static_cast<int>((v >> (nq - 1 - q)) & 1U);
  return b;
}

BasisIndex from_bits(const Bits& b) {
  BasisIndex v = 0;
  for (const int x : b) v = (v << 1) | static_cast<BasisIndex>(x);
  return v;
}

std::size_t qubit_of(const RegisterLayout& layout, const QubitRef& q) {
  if (q.qubit >= layout.width(q.reg)) {
    throw PreconditionError("qubit " + std::to_string(q.qubit) + " outside register " + q.reg);
  }
  return layout.offset(q.reg) + q.qubit;
}

bool projector_holds(const Projector& p, const RegisterLayout& layout, const Bits& bits) {
  for (const auto& rc : p.register_conditions()) {
    const std::size_t w = layout.width(rc.reg);
    const std::size_t off = layout.offset(rc.reg);
    for (std::size_t q = 0; q < w; ++q) {
      const int want = static_cast<int>((rc.value >> (w - 1 - q)) & 1U);
      if (bits[off + q] != want) return false;
    }
  }
  for (const auto& qc : p.qubit_conditions()) {
    if (bits[qubit_of(layout, qc.qubit)] != static_cast<int>(qc.value)) return false;
  }
  return true;
}

void apply_action(const ControlledAction& action, const RegisterLayout& layout, Bits& bits) {
  if (const auto* f = std::get_if<FlipQubit>(&action)) {
    const std::size_t t = qubit_of(layout, f->target);
    bits[t] ^= 1;
  } else if (const auto* s = std::get_if<SwapRegisters>(&action)) {
    const std::size_t w = layout.width(s->a);
    const std::size_t oa = layout.offset(s->a);
    const std::size_t ob = layout.offset(s->b);
    for (std::size_t q = 0; q < w; ++q) std::swap(bits[oa + q], bits[ob + q]);
  } else {
    const auto& sq = std::get<SwapQubits>(action);
    std::swap(bits[qubit_of(layout, sq.a)], bits[qubit_of(layout, sq.b)]);
  }
}

ComplexMatrix gate_matrix(const Gate& g, std::size_t nq) {
  const std::size_t dim = std::size_t{1} << nq;
  ComplexMatrix u(dim, dim);
  for (BasisIndex col = 0; col < dim; ++col) {
    Bits b = to_bits(col, nq);
    bool fire = true;
    for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) fire = fire && b[g.qubits[i]] == 1;
    if (fire) b[g.qubits.back()] ^= 1;
    u(from_bits(b), col) = 1.0;
  }
  return u;
}

void check_dense(std::size_t nq) {
  if (nq > kMaxDenseQubits) {
    throw PreconditionError("dense matrix on " + std::to_string(nq) + " qubits exceeds " +
                            std::to_string(kMaxDenseQubits));
  }
}

}  // namespace

OracleResult oracle_row_add(const ComplexMatrix& a, std::size_t k, std::size_t l) {
  if (k >= a.rows() || l >= a.rows() || k == l) throw PreconditionError("bad row indices");
  OracleResult r;
  r.matrix = a;
  for (std::size_t j = 0; j < a.cols(); ++j) r.matrix(l, j) += a(k, j);
  double g2 = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) g2 += std::norm(r.matrix(i, j));
  }
  r.normalization_g = std::sqrt(g2);
  r.predicted_probability = g2 / 8.0;
  return r;
}

OracleResult oracle_row_swap(const ComplexMatrix& a, std::size_t k, std::size_t l) {
  if (k >= a.rows() || l >= a.rows() || k == l) throw PreconditionError("bad row indices");
  OracleResult r;
  r.matrix = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    r.matrix(k, j) = a(l, j);
    r.matrix(l, j) = a(k, j);
  }
  r.predicted_probability = 1.0 / 24.0;
  return r;
}

OracleResult oracle_trace(const ComplexMatrix& s) {
  if (s.rows() != s.cols()) throw PreconditionError("trace of a non-square matrix");
  OracleResult r;
  for (std::size_t i = 0; i < s.rows(); ++i) r.scalar += s(i, i);
  const double n = static_cast<double>(s.rows());
  r.predicted_probability = std::norm(r.scalar) / (n * n * n);
  return r;
}

OracleResult oracle_transpose(const ComplexMatrix& s) {
  OracleResult r;
  r.matrix = ComplexMatrix(s.cols(), s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) r.matrix(j, i) = s(i, j);
  }
  r.predicted_probability = 1.0;
  return r;
}

ComplexMatrix dense_unitary_of(const ControlledOp& op, const RegisterLayout& layout) {
  const std::size_t nq = layout.total_qubits();
  check_dense(nq);
  const std::size_t dim = std::size_t{1} << nq;
  ComplexMatrix u(dim, dim);
  for (BasisIndex col = 0; col < dim; ++col) {
    Bits b = to_bits(col, nq);
    if (projector_holds(op.projector, layout, b)) apply_action(op.action, layout, b);
    u(from_bits(b), col) += 1.0;
  }
  return u;
}

ComplexMatrix dense_unitary_of(const GateNetwork& network) {
  const std::size_t nq = network.num_qubits();
  check_dense(nq);
  const std::size_t dim = std::size_t{1} << nq;
  ComplexMatrix u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) u(i, i) = 1.0;
  for (const auto& g : network.gates) u = multiply(gate_matrix(g, nq), u);
  return u;
}

ComplexMatrix mcx_unitary(std::size_t num_controls, const std::vector<bool>& polarity) {
  const std::size_t nq = num_controls + 1;
  check_dense(nq);
  if (!polarity.empty() && polarity.size() != num_controls) {
    throw PreconditionError("polarity list length differs from the control count");
  }
  const std::size_t dim = std::size_t{1} << nq;
  ComplexMatrix u(dim, dim);
  for (BasisIndex col = 0; col < dim; ++col) {
    Bits b = to_bits(col, nq);
    bool fire = true;
    for (std::size_t c = 0; c < num_controls; ++c) {
      const int want = polarity.empty() || polarity[c] ? 1 : 0;
      fire = fire && b[c] == want;
    }
    if (fire) b[num_controls] ^= 1;
    u(from_bits(b), col) = 1.0;
  }
  return u;
}

BasisIndex evaluate_network(const GateNetwork& network, BasisIndex input) {
  Bits b = to_bits(input, network.num_qubits());
  for (const auto& g : network.gates) {
    bool fire = true;
    for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) fire = fire && b[g.qubits[i]] == 1;
    if (fire) b[g.qubits.back()] ^= 1;
  }
  return from_bits(b);
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw PreconditionError("unitarity of a non-square matrix");
  const std::size_t n = u.rows();
  // Column-wise nonzero lists keep this cheap for the permutation-like
  // matrices it is mostly used on.
  std::vector<std::vector<std::pair<std::size_t, Complex>>> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (u(i, j) != Complex{}) cols[j].emplace_back(i, u(i, j));
    }
  }
  std::vector<Complex> rowbuf(n);
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(rowbuf.begin(), rowbuf.end(), Complex{});
    for (const auto& [r, v] : cols[a]) rowbuf[r] = std::conj(v);
    for (std::size_t b = 0; b < n; ++b) {
      Complex s{};
      for (const auto& [r, v] : cols[b]) s += rowbuf[r] * v;
      if (a == b) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex x = a(i, k);
      if (x == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

}  // namespace qmatops::oracle

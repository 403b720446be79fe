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

#include "qmatops/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qmatops {

namespace {

constexpr double kPartNormTolerance = 1e-9;
constexpr double kDecodeLeakTolerance = 1e-9;

std::size_t pow2_at_least_two(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(n, 2)); }

std::size_t log2_exact(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

}  // namespace

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.dimension()) {
    throw PreconditionError("state has " + std::to_string(amplitudes_.size()) +
                            " amplitudes but the layout needs " +
                            std::to_string(layout_.dimension()));
  }
}

StateVector StateVector::basis_state(RegisterLayout layout, BasisIndex basis) {
  std::vector<Complex> amps(layout.dimension());
  if (basis >= amps.size()) throw PreconditionError("basis index out of range");
  amps[basis] = 1.0;
  return StateVector(std::move(layout), std::move(amps));
}

Complex StateVector::amplitude(const RegisterValues& values) const {
  return amplitudes_[layout_.compose(values)];
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return s;
}

std::size_t EncodedMatrix::row_qubits() const { return log2_exact(rows()); }
std::size_t EncodedMatrix::col_qubits() const { return log2_exact(cols()); }

EncodedMatrix encode_matrix(const ComplexMatrix& matrix) {
  if (matrix.empty()) throw PreconditionError("matrix must have at least one entry");
  if (!matrix.all_finite()) throw PreconditionError("matrix entries must be finite");
  const double norm2 = matrix.frobenius_norm_squared();
  if (!(norm2 > 0.0)) throw PreconditionError("matrix is all zero; cannot normalize");
  if (!std::isfinite(norm2)) throw PreconditionError("matrix norm overflows");

  const double scale = std::sqrt(norm2);
  ComplexMatrix padded(pow2_at_least_two(matrix.rows()), pow2_at_least_two(matrix.cols()));
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) padded(i, j) = matrix(i, j) / scale;
  }
  return EncodedMatrix{std::move(padded), matrix.rows(), matrix.cols(), scale};
}

StateVector matrix_state(const EncodedMatrix& encoded, const std::string& row_register,
                         const std::string& col_register) {
  RegisterLayout layout({{row_register, encoded.row_qubits()},
                         {col_register, encoded.col_qubits()}});
  const auto data = encoded.entries.data();
  return StateVector(std::move(layout), std::vector<Complex>(data.begin(), data.end()));
}

AncillaVector AncillaVector::make(Kind kind, std::size_t rows, std::size_t k, std::size_t l) {
  if (k >= rows || l >= rows) {
    throw PreconditionError("row indices k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                            " must lie in [0, " + std::to_string(rows) + ")");
  }
  if (k == l) throw PreconditionError("row indices must differ (k == l == " + std::to_string(k) + ")");
  return AncillaVector{kind, k, l, rows};
}

std::vector<Complex> AncillaVector::amplitudes() const {
  if (kind == Kind::kRowAdd) {
    std::vector<Complex> amps(rows);
    const double h = 1.0 / std::sqrt(2.0);
    amps[k] = h;
    amps[l] = h;
    return amps;
  }
  std::vector<Complex> amps(rows * rows);
  const double t = 1.0 / std::sqrt(3.0);
  amps[l * rows + k] = t;
  amps[k * rows + k] = t;
  amps[l * rows + l] = t;
  return amps;
}

ProductPart zero_part(const std::string& name, std::size_t width) {
  RegisterLayout layout({{name, width}});
  std::vector<Complex> amps(layout.dimension());
  amps[0] = 1.0;
  return ProductPart{std::move(layout), std::move(amps)};
}

StateVector prepare_product_state(const std::vector<ProductPart>& parts) {
  if (parts.empty()) throw PreconditionError("product state needs at least one part");
  RegisterLayout layout;
  std::vector<Complex> amps{1.0};
  for (const auto& part : parts) {
    if (part.amplitudes.size() != part.layout.dimension()) {
      throw PreconditionError("part amplitude table does not match its layout");
    }
    double norm2 = 0.0;
    for (const auto& z : part.amplitudes) norm2 += std::norm(z);
    if (std::abs(norm2 - 1.0) > kPartNormTolerance) {
      throw PreconditionError("product part is not unit-norm (|psi|^2 = " +
                              std::to_string(norm2) + ")");
    }
    layout = layout.concat(part.layout);
    std::vector<Complex> next(amps.size() * part.amplitudes.size());
    std::size_t idx = 0;
    for (const auto& a : amps) {
      for (const auto& b : part.amplitudes) next[idx++] = a * b;
    }
    amps = std::move(next);
  }
  return StateVector(std::move(layout), std::move(amps));
}

ComplexMatrix decode_matrix(const StateVector& state, const std::string& row_register,
                            const std::string& col_register, const RegisterValues& fixed) {
  const auto& layout = state.layout();
  if (row_register == col_register) throw PreconditionError("row and column registers coincide");
  if (!layout.contains(row_register) || !layout.contains(col_register)) {
    throw PreconditionError("row/column register missing from layout");
  }
  for (const auto& reg : layout.registers()) {
    if (reg.name == row_register || reg.name == col_register) {
      if (fixed.count(reg.name) != 0) {
        throw PreconditionError("register " + reg.name + " is both read out and pinned");
      }
      continue;
    }
    if (fixed.count(reg.name) == 0) {
      throw PreconditionError("register " + reg.name + " is neither read out nor pinned");
    }
  }

  const BasisIndex base = layout.compose(fixed);
  const std::size_t rows = std::size_t{1} << layout.width(row_register);
  const std::size_t cols = std::size_t{1} << layout.width(col_register);
  ComplexMatrix out(rows, cols);
  double captured = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const BasisIndex row_base = layout.with_register_value(base, row_register, i);
    for (std::size_t j = 0; j < cols; ++j) {
      const Complex z = state.amplitude(layout.with_register_value(row_base, col_register, j));
      out(i, j) = z;
      captured += std::norm(z);
    }
  }
  const double leaked = state.norm_squared() - captured;
  if (leaked > kDecodeLeakTolerance) {
    throw PreconditionError("decode would drop " + std::to_string(leaked) +
                            " of probability mass outside the pinned subspace");
  }
  return out;
}

double state_checksum(const StateVector& state) {
  double s = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) s += static_cast<double>(i + 1) * std::norm(amps[i]);
  return s;
}

}  // namespace qmatops

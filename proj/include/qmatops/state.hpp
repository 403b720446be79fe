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
#include <span>
#include <string>
#include <vector>

#include "qmatops/layout.hpp"
#include "qmatops/matrix.hpp"

namespace qmatops {

/// Dense amplitude vector bound to a register layout.
///
/// Values are never mutated after construction; every gate application
/// produces a fresh StateVector.
class StateVector {
 public:
  StateVector(RegisterLayout layout, std::vector<Complex> amplitudes);

  static StateVector basis_state(RegisterLayout layout, BasisIndex basis);

  const RegisterLayout& layout() const { return layout_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }

  Complex amplitude(BasisIndex basis) const { return amplitudes_[basis]; }
  Complex amplitude(const RegisterValues& values) const;

  double norm_squared() const;

  /// Moves the amplitude buffer out; used by gate kernels to build the next
  /// state without an extra copy.
  std::vector<Complex> release() && { return std::move(amplitudes_); }

 private:
  RegisterLayout layout_;
  std::vector<Complex> amplitudes_;
};

/// Classical matrix zero-padded to power-of-two dimensions and scaled to unit
/// Frobenius norm. `frobenius_scale` is the factor that was divided out.
struct EncodedMatrix {
  ComplexMatrix entries;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;
  double frobenius_scale = 1.0;

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
  std::size_t row_qubits() const;
  std::size_t col_qubits() const;
  bool is_square() const { return original_rows == original_cols; }
};

/// Pads to the next powers of two (each dimension at least 2) and normalizes.
/// Throws PreconditionError on an all-zero or non-finite matrix.
EncodedMatrix encode_matrix(const ComplexMatrix& matrix);

/// Amplitude state sum_ij a_ij |i>_row |j>_col over a fresh two-register layout.
StateVector matrix_state(const EncodedMatrix& encoded, const std::string& row_register,
                         const std::string& col_register);

/// The auxiliary register state that selects the rows to combine.
///
/// Row addition uses (|k> + |l>)/sqrt(2) on one register; row swapping uses
/// (|l>|k> + |k>|k> + |l>|l>)/sqrt(3) on a register pair.
struct AncillaVector {
  enum class Kind { kRowAdd, kRowSwap };

  Kind kind = Kind::kRowAdd;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t rows = 0;

  /// Validates 0 <= k, l < rows and k != l.
  static AncillaVector make(Kind kind, std::size_t rows, std::size_t k, std::size_t l);

  /// Length `rows` for kRowAdd, `rows * rows` (row-major pair) for kRowSwap.
  std::vector<Complex> amplitudes() const;
};

/// One tensor factor: a layout fragment with its amplitude table.
struct ProductPart {
  RegisterLayout layout;
  std::vector<Complex> amplitudes;
};

/// |0...0> on a single fresh register.
ProductPart zero_part(const std::string& name, std::size_t width);

/// Tensor product of the parts in declaration order. Each part must be
/// unit-norm within 1e-9.
StateVector prepare_product_state(const std::vector<ProductPart>& parts);

/// Reads the (i, j) amplitudes of |i>_row |j>_col with every other register
/// pinned by `fixed`. No renormalization is applied. Rejects the call if more
/// than 1e-9 of probability mass lies outside the pinned subspace.
ComplexMatrix decode_matrix(const StateVector& state, const std::string& row_register,
                            const std::string& col_register,
                            const RegisterValues& fixed = {});

/// Order-sensitive fingerprint sum_i (i + 1) |a_i|^2, used in step records.
double state_checksum(const StateVector& state);

}  // namespace qmatops

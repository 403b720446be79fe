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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmatops {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

/// Raised whenever an input violates an operation's precondition. The message
/// names the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& message)
      : std::invalid_argument(message) {}
};

/// Dense row-major complex matrix. Plain value type; no arithmetic beyond what
/// the encoders and oracles need.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  double frobenius_norm_squared() const;
  bool all_finite() const;

  /// Top-left rows x cols block.
  ComplexMatrix block(std::size_t rows, std::size_t cols) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix scaled(const ComplexMatrix& m, Complex factor);

std::string to_string(const ComplexMatrix& m);

}  // namespace qmatops

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

#include "qmatops/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmatops {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw PreconditionError("matrix data has " + std::to_string(data_.size()) +
                            " entries, expected rows*cols = " +
                            std::to_string(rows * cols));
  }
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw PreconditionError("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(data));
}

double ComplexMatrix::frobenius_norm_squared() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return s;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix ComplexMatrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw PreconditionError("block exceeds matrix shape");
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError("matrix shapes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

ComplexMatrix scaled(const ComplexMatrix& m, Complex factor) {
  ComplexMatrix out = m;
  for (auto& z : out.data()) z *= factor;
  return out;
}

std::string to_string(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      os << (j == 0 ? "[" : ", ") << z.real();
      if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    os << "]" << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os.str();
}

}  // namespace qmatops

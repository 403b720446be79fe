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

#include <algorithm>
#include <cmath>

#include "qmatops/matrix.hpp"
#include "reference.hpp"

namespace bridge {

inline qmatops::ComplexMatrix to_lib(const ref::Mat& m) {
  qmatops::ComplexMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
  }
  return out;
}

inline ref::Mat to_ref(const qmatops::ComplexMatrix& m) {
  ref::Mat out(m.rows(), std::vector<ref::C>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

// Infinity if the shapes differ.
inline double max_diff(const qmatops::ComplexMatrix& a, const ref::Mat& b) {
  if (a.rows() != b.size() || a.cols() != b[0].size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b[i][j]));
  }
  return worst;
}

inline bool exactly_equal(const qmatops::ComplexMatrix& a, const ref::Mat& b) {
  if (a.rows() != b.size() || a.cols() != b[0].size()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b[i][j]) return false;
    }
  }
  return true;
}

}  // namespace bridge

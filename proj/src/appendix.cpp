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

#include "qmatops/appendix.hpp"

#include <cmath>

namespace qmatops::appendix {

ComplexMatrix worked_matrix() {
  return ComplexMatrix::from_rows({
      {4.0 / 16, 1.0 / 16, 3.0 / 16, 3.0 / 16},
      {0.0, 8.0 / 16, 2.0 / 16, 2.0 / 16},
      {7.0 / 16, 0.0, 4.0 / 16, 0.0},
      {3.0 / 16, 3.0 / 16, 2.0 / 16, 8.0 / 16},
  });
}

std::vector<ListedTerm> listed_terms() {
  const ComplexMatrix a = worked_matrix();
  const std::size_t k = kRowK;
  const std::size_t l = kRowL;
  const double s3 = std::sqrt(3.0);
  const double s24 = std::sqrt(24.0);

  std::vector<ListedTerm> out;
  const auto add = [&](std::size_t phi, std::size_t r1, std::size_t c1, std::size_t r2,
                       std::size_t c2, BasisIndex b1, BasisIndex b2, BasisIndex b3, Complex amp) {
    out.push_back({phi,
                   {{"R1", r1}, {"C1", c1}, {"R2", r2}, {"C2", c2}, {"B1", b1}, {"B2", b2},
                    {"B3", b3}},
                   amp});
  };

  // Phi_0: every entry on each of the three (R2, C2) branches.
  // Phi_1: the (l, k) branch carries B1 = 1.
  for (const std::size_t phi : {0, 1}) {
    for (const auto& [r2, c2] : {std::pair{l, k}, {k, k}, {l, l}}) {
      const BasisIndex b1 = (phi == 1 && r2 == l && c2 == k) ? 1 : 0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) add(phi, i, j, r2, c2, b1, 0, 0, a(i, j) / s3);
      }
    }
  }

  // Phi_2: the separated useful terms.
  for (std::size_t j = 0; j < 4; ++j) {
    for (const std::size_t i : {std::size_t{0}, std::size_t{2}}) {
      add(2, i, j, l, k, 1, 0b00, 0, a(i, j) / s3);
    }
    add(2, k, j, l, l, 0, 0b10, 0, a(k, j) / s3);
    add(2, l, j, k, k, 0, 0b01, 0, a(l, j) / s3);
  }

  // Phi_3 and Phi_4: everything useful now sits on R2 = l, C2 = k, with the
  // rows already exchanged; Phi_4 adds the B3 label.
  for (const std::size_t phi : {3, 4}) {
    const BasisIndex b3 = phi == 4 ? 1 : 0;
    for (std::size_t j = 0; j < 4; ++j) {
      for (const std::size_t i : {std::size_t{0}, std::size_t{2}}) {
        add(phi, i, j, l, k, 1, 0b00, b3, a(i, j) / s3);
      }
      add(phi, l, j, l, k, 0, 0b10, b3, a(k, j) / s3);
      add(phi, k, j, l, k, 0, 0b01, b3, a(l, j) / s3);
    }
  }

  // Phi_5: the swapped matrix on the accepted ancilla pattern; Phi_6 after
  // renormalizing by the 1/24 probability.
  ComplexMatrix swapped = a;
  for (std::size_t j = 0; j < 4; ++j) {
    swapped(k, j) = a(l, j);
    swapped(l, j) = a(k, j);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      add(5, i, j, l, k, 0, 0b00, 1, swapped(i, j) / s24);
      add(6, i, j, l, k, 0, 0b00, 1, swapped(i, j));
    }
  }
  return out;
}

}  // namespace qmatops::appendix

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

// The worked 4x4 row-swap example: swap rows 3 and 1 (0-based), i.e. the 4th
// and 2nd rows, and the branch amplitudes listed for each intermediate state.

#pragma once

#include <cstddef>
#include <vector>

#include "qmatops/layout.hpp"
#include "qmatops/matrix.hpp"

namespace qmatops::appendix {

inline constexpr std::size_t kRowK = 3;
inline constexpr std::size_t kRowL = 1;

/// The example matrix as printed (Frobenius norm^2 = 258/256).
ComplexMatrix worked_matrix();

/// One listed term of |Phi_t>: amplitude before dividing by the matrix's
/// Frobenius scale. Registers not named are 0.
struct ListedTerm {
  std::size_t phi = 0;
  RegisterValues basis;
  Complex amplitude{};
};

/// Every term written out for |Phi_0> ... |Phi_6>.
std::vector<ListedTerm> listed_terms();

}  // namespace qmatops::appendix

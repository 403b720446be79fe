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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qmatops/algorithms.hpp"
#include "qmatops/complexity.hpp"
#include "qmatops/matrix.hpp"
#include "qmatops/measurement.hpp"

namespace qmatops::io {

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& message) : std::runtime_error(message) {}
};

// Matrix document:
//   {"rows": R, "cols": C, "data": [e_00, e_01, ..., e_(R-1)(C-1)]}
// where each entry is a number or an [re, im] pair.
ComplexMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

nlohmann::json tally_to_json(const GateTally& tally);
nlohmann::json scaling_to_json(const ScalingReport& report);

struct ReportContext {
  const EncodedMatrix* input = nullptr;
  bool verbose = false;
  const SamplingResult* sampling = nullptr;
};

/// Stable field names: algorithm, probability, predicted_probability,
/// gate_tally, matrix, scaled_matrix, frobenius_scale, trace, steps.
nlohmann::json report_to_json(const RunReport& report, const ReportContext& context);

/// Nonzero amplitudes of a state keyed by basis label.
nlohmann::json branches_to_json(const StateVector& state, double threshold = 1e-14);

}  // namespace qmatops::io

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

#include "qmatops/io.hpp"

#include <cmath>
#include <fstream>

namespace qmatops::io {

using nlohmann::json;

namespace {

// Anything below this in the padding counts as structurally zero when
// cropping a result back to its original shape.
constexpr double kPaddingTolerance = 1e-12;

Complex entry_from_json(const json& e, std::size_t index) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw FormatError("data[" + std::to_string(index) + "] must be a number or an [re, im] pair");
}

json complex_to_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json counts_to_json(const GateCounts& c) {
  return {{"toffoli", c.toffoli}, {"cnot", c.cnot}, {"single_qubit", c.single_qubit},
          {"swaps", c.swaps}};
}

json fit_to_json(const LinearFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"max_residual", f.max_residual},
          {"exact", f.exact}};
}

std::size_t positive_size(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0) {
    throw FormatError(std::string("\"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

// Crops a padded result when nothing outside the target block is nonzero.
ComplexMatrix crop_if_lossless(const ComplexMatrix& m, std::size_t rows, std::size_t cols) {
  if (rows > m.rows() || cols > m.cols()) return m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if ((i >= rows || j >= cols) && std::abs(m(i, j)) > kPaddingTolerance) return m;
    }
  }
  return m.block(rows, cols);
}

}  // namespace

ComplexMatrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("matrix document must be a JSON object");
  const std::size_t rows = positive_size(doc, "rows");
  const std::size_t cols = positive_size(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array()) {
    throw FormatError("\"data\" must be a flat row-major array");
  }
  const json& data = doc["data"];
  if (data.size() != rows * cols) {
    throw FormatError("\"data\" holds " + std::to_string(data.size()) + " entries, expected " +
                      std::to_string(rows * cols));
  }
  std::vector<Complex> values;
  values.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) values.push_back(entry_from_json(data[i], i));
  return ComplexMatrix(rows, cols, std::move(values));
}

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (const Complex z : m.data()) data.push_back(complex_to_json(z));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return matrix_from_json(doc);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << matrix_to_json(m).dump(2) << '\n';
}

json tally_to_json(const GateTally& tally) {
  json steps = json::object();
  for (const auto& [label, counts] : tally.per_step) steps[label] = counts_to_json(counts);
  return {{"total", counts_to_json(tally.total)}, {"per_step", std::move(steps)}};
}

json scaling_to_json(const ScalingReport& report) {
  json series = json::array();
  for (const auto& [width, tally] : report.series) {
    series.push_back({{"width", width},
                      {"qubits", scaling_qubits(report.algorithm, width)},
                      {"tally", tally_to_json(tally)}});
  }
  json fits = json::object();
  for (const auto& [label, fit] : report.fits) fits[label] = fit_to_json(fit);

  json claims = json::array();
  for (const auto& c : report.claims) {
    json counts = json::array();
    for (const auto& [width, tally] : report.series) {
      const auto it = tally.per_step.find(c.step);
      const GateCounts& g = c.step == "total" ? tally.total
                            : it == tally.per_step.end() ? GateCounts{}
                                                         : it->second;
      counts.push_back(metric_value(g, c.metric));
    }
    claims.push_back({{"step", c.step},
                      {"claimed", c.order_text},
                      {"order", to_string(c.order)},
                      {"metric", to_string(c.metric)},
                      {"counts", std::move(counts)},
                      {"fit", fit_to_json(c.fit)},
                      {"passed", c.passed},
                      {"note", c.note}});
  }
  return {{"algorithm", to_string(report.algorithm)},
          {"series", std::move(series)},
          {"fits", std::move(fits)},
          {"claims", std::move(claims)},
          {"all_passed", report.all_passed()}};
}

json report_to_json(const RunReport& report, const ReportContext& context) {
  json out;
  out["algorithm"] = report.algorithm;
  out["probability"] = report.success_probability;
  out["predicted_probability"] = report.predicted_probability;
  out["accepted_pattern"] = report.accepted_pattern;
  out["gate_tally"] = tally_to_json(report.gate_tally);

  const double input_scale = context.input ? context.input->frobenius_scale : 1.0;
  out["frobenius_scale"] = input_scale;

  if (report.output_matrix) {
    out["matrix"] = matrix_to_json(*report.output_matrix);
    ComplexMatrix scaled_out =
        scaled(*report.output_matrix, report.output_scale * input_scale);
    if (context.input) {
      const bool transposed = report.algorithm.starts_with("transpose");
      const std::size_t rows = transposed ? context.input->original_cols
                                          : context.input->original_rows;
      const std::size_t cols = transposed ? context.input->original_rows
                                          : context.input->original_cols;
      scaled_out = crop_if_lossless(scaled_out, rows, cols);
    }
    out["scaled_matrix"] = matrix_to_json(scaled_out);
  } else {
    out["matrix"] = nullptr;
    out["scaled_matrix"] = nullptr;
  }

  if (report.trace) {
    out["trace"] = json::array({report.trace->real(), report.trace->imag()});
    const Complex t = *report.trace * input_scale;
    out["scaled_trace"] = json::array({t.real(), t.imag()});
  } else {
    out["trace"] = nullptr;
  }

  json steps = json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"label", s.label},
                     {"operator", s.name},
                     {"norm_squared", s.norm_squared},
                     {"checksum", s.checksum}});
  }
  out["steps"] = std::move(steps);

  json checks = json::object();
  for (const auto& [name, ok] : report.checks) checks[name] = ok;
  out["checks"] = std::move(checks);

  if (context.sampling) {
    out["sampling"] = {{"shots", context.sampling->shots},
                       {"accepted", context.sampling->accepted},
                       {"frequency", context.sampling->frequency}};
  }
  if (context.verbose) {
    json states = json::array();
    for (std::size_t t = 0; t < report.states.size(); ++t) {
      states.push_back({{"phi", t}, {"branches", branches_to_json(report.states[t])}});
    }
    out["states"] = std::move(states);
  }
  return out;
}

json branches_to_json(const StateVector& state, double threshold) {
  json out = json::object();
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) > threshold) {
      out[state.layout().basis_label(i)] = json::array({amps[i].real(), amps[i].imag()});
    }
  }
  return out;
}

}  // namespace qmatops::io

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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmatops/algorithms.hpp"
#include "qmatops/appendix.hpp"
#include "qmatops/complexity.hpp"
#include "qmatops/io.hpp"
#include "qmatops/verify.hpp"

namespace qmatops::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string matrix_out;
  std::size_t k = 0;
  std::size_t l = 0;
  std::uint64_t seed = 1;
  std::uint64_t shots = 0;
  bool verbose = false;
  std::string algorithm;
  std::vector<std::size_t> widths;
};

void emit(const nlohmann::json& doc, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw io::FormatError("cannot write " + opt.output);
  f << doc.dump(2) << '\n';
}

using Runner = std::function<RunReport(const EncodedMatrix&, const RunOptions&)>;

// Each branch written out for the worked example next to the simulated
// amplitude of the same basis state.
nlohmann::json listed_comparison(const RunReport& report, double scale) {
  nlohmann::json rows = nlohmann::json::array();
  double worst = 0.0;
  for (const auto& term : appendix::listed_terms()) {
    const StateVector& phi = report.states.at(term.phi);
    const Complex listed = term.amplitude / scale;
    const Complex simulated = phi.amplitude(term.basis);
    worst = std::max(worst, std::abs(listed - simulated));
    rows.push_back({{"phi", "Phi_" + std::to_string(term.phi)},
                    {"basis", phi.layout().basis_label(phi.layout().compose(term.basis))},
                    {"listed", {listed.real(), listed.imag()}},
                    {"simulated", {simulated.real(), simulated.imag()}}});
  }
  return {{"terms", std::move(rows)}, {"max_deviation", worst}};
}

nlohmann::json run_matrix_command(const Runner& runner, const EncodedMatrix& enc,
                                  const Options& opt, std::ostream& out,
                                  bool compare_listed = false) {
  RunOptions run_options{.record_states = opt.verbose || opt.shots > 0 || compare_listed};
  const RunReport report = runner(enc, run_options);

  SamplingResult sampling;
  if (opt.shots > 0) {
    // states[steps] is the last state before the measurement.
    sampling = sample_post_selection(report.states.at(report.steps.size()),
                                     report.accepted_pattern, opt.shots, opt.seed);
  }
  nlohmann::json doc = io::report_to_json(
      report, {.input = &enc, .verbose = opt.verbose, .sampling = opt.shots > 0 ? &sampling : nullptr});
  if (!opt.matrix_out.empty()) {
    if (doc["scaled_matrix"].is_null()) {
      throw PreconditionError("no output matrix: the accepted outcome has zero probability");
    }
    io::write_matrix_file(opt.matrix_out, io::matrix_from_json(doc["scaled_matrix"]));
  }
  if (compare_listed) doc["listed_terms"] = listed_comparison(report, enc.frobenius_scale);
  emit(doc, opt, out);
  return doc;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum matrix-operation circuits on a dense state-vector simulator", "qmatops"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub, bool with_matrix_out) {
    sub->add_option("--input", opt.input, "matrix JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output", opt.output, "write the JSON report here instead of stdout");
    sub->add_option("--seed", opt.seed, "seed for --shots sampling");
    sub->add_option("--shots", opt.shots, "also sample the ancilla measurement this many times");
    sub->add_flag("--verbose", opt.verbose, "include every intermediate state");
    if (with_matrix_out) {
      sub->add_option("--matrix-out", opt.matrix_out, "write the rescaled result matrix here");
    }
  };

  auto* row_add = app.add_subcommand("row-add", "add row k to row l");
  auto* row_swap = app.add_subcommand("row-swap", "exchange rows k and l");
  for (auto* sub : {row_add, row_swap}) {
    add_common(sub, true);
    sub->add_option("--k", opt.k, "source row (0-based)")->required();
    sub->add_option("--l", opt.l, "target row (0-based)")->required();
  }
  auto* trace = app.add_subcommand("trace", "trace of a square matrix");
  add_common(trace, false);
  auto* transpose = app.add_subcommand("transpose", "transpose via a register swap");
  add_common(transpose, true);
  auto* transpose_sq = app.add_subcommand("transpose-square", "transpose by relabeling R and C");
  add_common(transpose_sq, true);

  auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
  verify->add_option("--seed", opt.seed, "suite seed");
  verify->add_option("--output", opt.output, "write a JSON summary here as well");

  auto* scaling = app.add_subcommand("scaling", "gate counts against register width");
  scaling->add_option("--algorithm", opt.algorithm, "row-add, row-swap, trace or transpose")
      ->required()
      ->check(CLI::IsMember({"row-add", "row-swap", "trace", "transpose"}));
  scaling->add_option("--widths", opt.widths, "register widths, e.g. --widths 2 3 4 5")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxScalingWidth));
  scaling->add_option("--seed", opt.seed, "matrix seed");
  scaling->add_option("--output", opt.output, "write the JSON report here instead of stdout");

  auto* appendix1 = app.add_subcommand("appendix1", "the worked 4x4 row swap (rows 3 and 1)");
  appendix1->add_flag("--verbose", opt.verbose, "include every intermediate state");
  appendix1->add_option("--output", opt.output, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto load = [&] { return encode_matrix(io::read_matrix_file(opt.input)); };

    if (row_add->parsed()) {
      run_matrix_command([&](const EncodedMatrix& e, const RunOptions& o) {
        return run_row_add(e, opt.k, opt.l, o);
      }, load(), opt, out);
    } else if (row_swap->parsed()) {
      run_matrix_command([&](const EncodedMatrix& e, const RunOptions& o) {
        return run_row_swap(e, opt.k, opt.l, o);
      }, load(), opt, out);
    } else if (trace->parsed()) {
      run_matrix_command(run_trace, load(), opt, out);
    } else if (transpose->parsed()) {
      run_matrix_command(run_transpose, load(), opt, out);
    } else if (transpose_sq->parsed()) {
      run_matrix_command(run_transpose_square, load(), opt, out);
    } else if (appendix1->parsed()) {
      const EncodedMatrix enc = encode_matrix(appendix::worked_matrix());
      const auto doc = run_matrix_command([](const EncodedMatrix& e, const RunOptions& o) {
        return run_row_swap(e, appendix::kRowK, appendix::kRowL, o);
      }, enc, opt, out, /*compare_listed=*/true);
      return doc["listed_terms"]["max_deviation"].get<double>() <= 1e-10 ? 0 : 1;
    } else if (scaling->parsed()) {
      const ScalingReport r = measure_scaling(*parse_algorithm(opt.algorithm), opt.widths, opt.seed);
      emit(io::scaling_to_json(r), opt, out);
      return r.all_passed() ? 0 : 1;
    } else if (verify->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const auto results = run_verification_suite(opt.seed);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      bool all = true;
      nlohmann::json summary = nlohmann::json::array();
      for (const auto& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
        summary.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
      }
      out << results.size() << " properties, " << (all ? "all passed" : "FAILURES") << ", "
          << seconds << " s\n";
      if (!opt.output.empty()) {
        std::ofstream f(opt.output);
        if (!f) throw io::FormatError("cannot write " + opt.output);
        f << nlohmann::json{{"properties", summary}, {"seconds", seconds}, {"all_passed", all}}
                 .dump(2)
          << '\n';
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qmatops::cli

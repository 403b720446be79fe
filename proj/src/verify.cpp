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

#include "qmatops/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qmatops/algorithms.hpp"
#include "qmatops/appendix.hpp"
#include "qmatops/complexity.hpp"
#include "qmatops/oracle.hpp"
#include "qmatops/random.hpp"

namespace qmatops {

namespace {

constexpr double kTol = 1e-10;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

std::size_t pick(std::mt19937_64& rng, std::initializer_list<std::size_t> options) {
  std::uniform_int_distribution<std::size_t> d(0, options.size() - 1);
  return *(options.begin() + d(rng));
}

std::pair<std::size_t, std::size_t> distinct_rows(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  const std::size_t k = d(rng);
  std::size_t l = d(rng);
  while (l == k) l = d(rng);
  return {k, l};
}

PropertyResult row_add_property(std::mt19937_64& rng) {
  double worst_p = 0.0;
  double worst_m = 0.0;
  const int cases = 120;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = pick(rng, {2, 4, 8});
    const std::size_t m = pick(rng, {2, 4, 8});
    const auto enc = encode_matrix(random_complex_matrix(rng, n, m));
    const auto [k, l] = distinct_rows(rng, n);
    const RunReport r = run_row_add(enc, k, l);
    const auto o = oracle::oracle_row_add(enc.entries, k, l);
    worst_p = std::max(worst_p, std::abs(r.success_probability - o.predicted_probability));
    worst_m = std::max(worst_m, max_abs_difference(*r.output_matrix,
                                                   scaled(o.matrix, 1.0 / o.normalization_g)));
  }
  return {"row-add matches oracle, probability G^2/8", worst_p <= kTol && worst_m <= kTol,
          std::to_string(cases) + " cases, max |dp| " + fmt(worst_p) + ", max |dA| " +
              fmt(worst_m)};
}

PropertyResult row_swap_property(std::mt19937_64& rng) {
  double worst_p = 0.0;
  double worst_m = 0.0;
  const int cases = 60;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = pick(rng, {2, 4, 8, 16});
    const std::size_t m = pick(rng, {2, 4});
    const auto enc = encode_matrix(random_complex_matrix(rng, n, m));
    const auto [k, l] = distinct_rows(rng, n);
    const RunReport r = run_row_swap(enc, k, l);
    const auto o = oracle::oracle_row_swap(enc.entries, k, l);
    worst_p = std::max(worst_p, std::abs(r.success_probability - 1.0 / 24.0));
    worst_m = std::max(worst_m, max_abs_difference(*r.output_matrix, o.matrix));
  }
  return {"row-swap matches oracle, probability 1/24 for N up to 16",
          worst_p <= kTol && worst_m <= kTol,
          std::to_string(cases) + " cases, max |dp| " + fmt(worst_p) + ", max |dA| " +
              fmt(worst_m)};
}

PropertyResult trace_property(std::mt19937_64& rng) {
  double worst_p = 0.0;
  double worst_t = 0.0;
  const int cases = 60;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = pick(rng, {2, 4, 8});
    ComplexMatrix a = random_complex_matrix(rng, n, n);
    if (t % 10 == 0) {
      // Traceless variant.
      Complex tr{};
      for (std::size_t i = 0; i + 1 < n; ++i) tr += a(i, i);
      a(n - 1, n - 1) = -tr;
    }
    const auto enc = encode_matrix(a);
    const RunReport r = run_trace(enc);
    const auto o = oracle::oracle_trace(enc.entries);
    worst_p = std::max(worst_p, std::abs(r.success_probability - o.predicted_probability));
    worst_t = std::max(worst_t, std::abs(*r.trace - o.scalar));
    for (const auto& [name, ok] : r.checks) {
      if (!ok) return {"trace matches oracle", false, "check failed: " + name};
    }
  }
  return {"trace matches oracle, probability |tr|^2/2^(3n)", worst_p <= kTol && worst_t <= kTol,
          std::to_string(cases) + " cases, max |dp| " + fmt(worst_p) + ", max |dtr| " +
              fmt(worst_t)};
}

PropertyResult transpose_property(std::mt19937_64& rng) {
  bool exact = true;
  bool square_agrees = true;
  const int cases = 60;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = pick(rng, {1, 2, 3, 4, 8});
    const std::size_t m = pick(rng, {1, 2, 4, 5, 8});
    if (n * m < 2) continue;
    const auto enc = encode_matrix(random_complex_matrix(rng, n, m));
    const RunReport r = run_transpose(enc);
    const auto o = oracle::oracle_transpose(enc.entries);
    exact = exact && r.success_probability == 1.0 && *r.output_matrix == o.matrix;
    const RunReport sq = run_transpose_square(enc);
    square_agrees = square_agrees && *sq.output_matrix == *r.output_matrix;
  }
  return {"transpose exact with probability 1, square variant agrees", exact && square_agrees,
          std::string(exact ? "exact" : "mismatch") + ", square variant " +
              (square_agrees ? "agrees" : "differs")};
}

PropertyResult trace_transpose_property(std::mt19937_64& rng) {
  double worst = 0.0;
  const int cases = 30;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = pick(rng, {2, 4, 8});
    const auto enc = encode_matrix(random_complex_matrix(rng, n, n));
    const RunReport direct = run_trace(enc);
    const RunReport flipped = run_trace(encode_matrix(*run_transpose_square(enc).output_matrix));
    worst = std::max(worst, std::abs(*direct.trace - *flipped.trace));
    worst = std::max(worst, std::abs(direct.success_probability - flipped.success_probability));
  }
  return {"trace unchanged by transposing first", worst <= kTol,
          std::to_string(cases) + " cases, max deviation " + fmt(worst)};
}

PropertyResult appendix_property() {
  const auto enc = encode_matrix(appendix::worked_matrix());
  const RunReport r =
      run_row_swap(enc, appendix::kRowK, appendix::kRowL, RunOptions{.record_states = true});
  const auto o = oracle::oracle_row_swap(enc.entries, appendix::kRowK, appendix::kRowL);
  const double dm = max_abs_difference(*r.output_matrix, o.matrix);
  const double dp = std::abs(r.success_probability - 1.0 / 24.0);
  double dterm = 0.0;
  std::size_t terms = 0;
  for (const auto& term : appendix::listed_terms()) {
    const Complex expected = term.amplitude / enc.frobenius_scale;
    dterm = std::max(dterm, std::abs(r.states.at(term.phi).amplitude(term.basis) - expected));
    ++terms;
  }
  return {"worked 4x4 row swap reproduces every listed state",
          dm <= kTol && dp <= kTol && dterm <= kTol,
          std::to_string(terms) + " listed terms, max |damp| " + fmt(dterm) + ", |dp| " +
              fmt(dp) + ", |dA| " + fmt(dm)};
}

PropertyResult completeness_property(std::mt19937_64& rng) {
  double worst = 0.0;
  const auto sum_over = [&](const PreparedCircuit& p, const std::vector<std::string>& regs) {
    const StateVector out = run_circuit(p.circuit, p.initial, false).final_state;
    std::size_t bits = 0;
    for (const auto& reg : regs) bits += out.layout().width(reg);
    double total = 0.0;
    for (BasisIndex v = 0; v < (BasisIndex{1} << bits); ++v) {
      RegisterValues pattern;
      std::size_t shift = bits;
      for (const auto& reg : regs) {
        const std::size_t w = out.layout().width(reg);
        shift -= w;
        pattern[reg] = (v >> shift) & ((BasisIndex{1} << w) - 1);
      }
      total += post_select(out, pattern).probability;
    }
    worst = std::max(worst, std::abs(total - 1.0));
  };
  for (int t = 0; t < 10; ++t) {
    const auto enc = encode_matrix(random_complex_matrix(rng, 4, 4));
    sum_over(prepare_row_add(enc, 1, 2), {"B1", "B2", "B3"});
    sum_over(prepare_row_swap(enc, 3, 0), {"B1", "B2", "B3"});
    sum_over(prepare_trace(enc), {"B2"});
    sum_over(prepare_trace(enc), {"B1", "B2"});
  }
  return {"ancilla outcome probabilities sum to 1", worst <= 1e-12, "max |sum - 1| " + fmt(worst)};
}

// Every ControlledOp of every algorithm on layouts up to 10 qubits: unitary,
// and the dense matrix acts like the simulator kernel.
PropertyResult unitarity_property(std::mt19937_64& rng) {
  std::vector<PreparedCircuit> circuits;
  const auto enc = [&](std::size_t n, std::size_t m) {
    return encode_matrix(random_complex_matrix(rng, n, m));
  };
  circuits.push_back(prepare_row_add(enc(2, 2), 0, 1));
  circuits.push_back(prepare_row_add(enc(4, 2), 3, 1));
  circuits.push_back(prepare_row_add(enc(4, 4), 2, 0));
  circuits.push_back(prepare_row_swap(enc(2, 2), 1, 0));
  circuits.push_back(prepare_row_swap(enc(2, 4), 0, 1));
  circuits.push_back(prepare_trace(enc(2, 2)));
  circuits.push_back(prepare_trace(enc(4, 4)));

  double defect = 0.0;
  double action = 0.0;
  std::size_t ops = 0;
  for (const auto& p : circuits) {
    const auto& layout = p.circuit.layout;
    if (layout.total_qubits() > 10) continue;
    for (const auto& step : p.circuit.steps) {
      for (const auto& tagged : step.ops) {
        const auto* cop = std::get_if<ControlledOp>(&tagged.op);
        if (!cop) continue;
        const ComplexMatrix u = oracle::dense_unitary_of(*cop, layout);
        defect = std::max(defect, oracle::unitarity_defect(u));
        const ComplexMatrix psi = random_complex_matrix(rng, layout.dimension(), 1);
        const StateVector in(layout, std::vector<Complex>(psi.data().begin(), psi.data().end()));
        const StateVector out = apply_controlled(in, *cop);
        const ComplexMatrix expected = oracle::multiply(u, psi);
        const ComplexMatrix got(layout.dimension(), 1,
                                std::vector<Complex>(out.amplitudes().begin(),
                                                     out.amplitudes().end()));
        action = std::max(action, max_abs_difference(expected, got));
        ++ops;
      }
    }
  }
  return {"controlled operations are unitary and match their dense form",
          defect <= 1e-12 && action <= 1e-12,
          std::to_string(ops) + " operations, max defect " + fmt(defect) + ", max action error " +
              fmt(action)};
}

bool mcx_matches_dense(std::size_t c, const std::vector<bool>& polarity) {
  const GateNetwork net = decompose_mcx(c, polarity);
  const ComplexMatrix u = oracle::dense_unitary_of(net);
  const ComplexMatrix direct = oracle::mcx_unitary(c, polarity);
  const std::size_t work = net.num_work;
  // Inputs and outputs with clean work qubits (the low bits) must agree with
  // the direct gate; nothing may leak into dirty work states.
  for (BasisIndex col = 0; col < direct.cols(); ++col) {
    for (BasisIndex row = 0; row < u.rows(); ++row) {
      const Complex got = u(row, col << work);
      const bool clean = (row & ((BasisIndex{1} << work) - 1)) == 0;
      const Complex want = clean ? direct(row >> work, col) : Complex{};
      if (got != want) return false;
    }
  }
  return true;
}

bool mcx_matches_basis(std::size_t c, const std::vector<bool>& polarity) {
  const GateNetwork net = decompose_mcx(c, polarity);
  const std::size_t work = net.num_work;
  for (BasisIndex in = 0; in < (BasisIndex{1} << (c + 1)); ++in) {
    bool fire = true;
    for (std::size_t q = 0; q < c; ++q) {
      const bool bit = (in >> (c - q)) & 1U;
      fire = fire && bit == (polarity.empty() || polarity[q]);
    }
    const BasisIndex want = (fire ? in ^ 1U : in) << work;
    if (oracle::evaluate_network(net, in << work) != want) return false;
  }
  return true;
}

PropertyResult mcx_property(std::mt19937_64& rng) {
  bool dense_ok = true;
  for (std::size_t c = 1; c <= 4; ++c) {
    for (BasisIndex mask = 0; mask < (BasisIndex{1} << c); ++mask) {
      std::vector<bool> polarity(c);
      for (std::size_t q = 0; q < c; ++q) polarity[q] = (mask >> q) & 1U;
      dense_ok = dense_ok && mcx_matches_dense(c, polarity);
    }
  }
  bool basis_ok = true;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 5; c <= 12; ++c) {
    std::vector<bool> polarity(c);
    for (std::size_t q = 0; q < c; ++q) polarity[q] = coin(rng);
    basis_ok = basis_ok && mcx_matches_basis(c, {}) && mcx_matches_basis(c, polarity);
  }
  bool counts_ok = true;
  for (std::size_t c = 1; c <= kMaxMcxControls; ++c) {
    counts_ok = counts_ok && count_gates(decompose_mcx(c)).toffoli == 2 * (c - 1);
  }
  return {"MCX decomposition equals direct MCX, 2(c-1) Toffolis",
          dense_ok && basis_ok && counts_ok,
          std::string("dense 1-4 ") + (dense_ok ? "ok" : "FAIL") + ", basis 5-12 " +
              (basis_ok ? "ok" : "FAIL") + ", counts " + (counts_ok ? "ok" : "FAIL")};
}

PropertyResult complexity_property(std::uint64_t seed) {
  const std::vector<std::pair<Algorithm, std::vector<std::size_t>>> plan = {
      {Algorithm::kRowAdd, {2, 3, 4, 5}},
      {Algorithm::kRowSwap, {2, 3, 4, 5}},
      {Algorithm::kTrace, {1, 2, 3}},
      {Algorithm::kTranspose, {1, 2, 3, 4, 5, 6}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [alg, widths] : plan) {
    const ScalingReport r = measure_scaling(alg, widths, seed);
    std::size_t passed = 0;
    for (const auto& c : r.claims) passed += c.passed ? 1 : 0;
    ok = ok && r.all_passed();
    if (!detail.empty()) detail += ", ";
    detail += to_string(alg) + " " + std::to_string(passed) + "/" +
              std::to_string(r.claims.size());
  }
  return {"annotated step complexities hold", ok, detail};
}

}  // namespace

std::vector<PropertyResult> run_verification_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyResult> out;
  out.push_back(appendix_property());
  out.push_back(row_add_property(rng));
  out.push_back(row_swap_property(rng));
  out.push_back(trace_property(rng));
  out.push_back(transpose_property(rng));
  out.push_back(trace_transpose_property(rng));
  out.push_back(completeness_property(rng));
  out.push_back(unitarity_property(rng));
  out.push_back(mcx_property(rng));
  out.push_back(complexity_property(seed));
  return out;
}

}  // namespace qmatops

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

#include "qmatops/measurement.hpp"

#include <cmath>
#include <random>

namespace qmatops {

namespace {

struct PatternMask {
  BasisIndex mask = 0;
  BasisIndex value = 0;
};

PatternMask pattern_mask(const RegisterLayout& layout, const RegisterValues& pattern) {
  PatternMask m;
  for (const auto& [name, value] : pattern) {
    m.mask = layout.with_register_value(m.mask, name, (BasisIndex{1} << layout.width(name)) - 1);
    m.value = layout.with_register_value(m.value, name, value);
  }
  return m;
}

}  // namespace

PostSelection post_select(const StateVector& state, const RegisterValues& pattern) {
  const auto& layout = state.layout();
  const PatternMask pm = pattern_mask(layout, pattern);
  const auto amps = state.amplitudes();

  double matched = 0.0;
  double total = 0.0;
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    total += p;
    if ((i & pm.mask) == pm.value) matched += p;
  }

  PostSelection out;
  out.pattern = pattern;
  out.probability = total > 0.0 ? matched / total : 0.0;
  if (out.probability <= kZeroProbability) {
    out.probability = out.probability < 0.0 ? 0.0 : out.probability;
    return out;
  }
  // Keeps the input's own norm; a pattern that takes all the mass leaves the
  // amplitudes bit-for-bit unchanged.
  const double inv = matched == total ? 1.0 : std::sqrt(total / matched);
  std::vector<Complex> projected(amps.size());
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if ((i & pm.mask) == pm.value) projected[i] = amps[i] * inv;
  }
  out.renormalized_state.emplace(layout, std::move(projected));
  return out;
}

SamplingResult sample_post_selection(const StateVector& state, const RegisterValues& pattern,
                                     std::uint64_t shots, std::uint64_t seed) {
  const auto& layout = state.layout();
  const PatternMask pm = pattern_mask(layout, pattern);

  // Compact the measured bits into an outcome index.
  std::vector<BasisIndex> bits;
  for (std::size_t q = 0; q < layout.total_qubits(); ++q) {
    const BasisIndex b = layout.bit_mask(q);
    if (pm.mask & b) bits.push_back(b);
  }
  const auto outcome_of = [&](BasisIndex basis) {
    BasisIndex o = 0;
    for (const BasisIndex b : bits) o = (o << 1) | ((basis & b) ? 1U : 0U);
    return o;
  };

  std::vector<double> weights(std::size_t{1} << bits.size(), 0.0);
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) weights[outcome_of(i)] += std::norm(amps[i]);
  const BasisIndex accept = outcome_of(pm.value);

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
  SamplingResult r;
  r.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    if (dist(rng) == accept) ++r.accepted;
  }
  r.frequency = shots == 0 ? 0.0 : static_cast<double>(r.accepted) / static_cast<double>(shots);
  return r;
}

}  // namespace qmatops

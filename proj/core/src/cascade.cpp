// Copyright 2026 The heraldsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heraldsim/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "heraldsim/channels.hpp"

namespace heraldsim {

namespace {

constexpr int kInnerModes[4] = {2, 3, 4, 5};
constexpr int kOuterModes[4] = {0, 1, 6, 7};

const BeamsplitterSpec kBsH{4, 2, 0.5};
const BeamsplitterSpec kBsV{5, 3, 0.5};

PureState through_bsm(const PureState& joint) {
  return apply_beamsplitter(apply_beamsplitter(joint, kBsH), kBsV);
}

template <typename Fn>
DensityOperator map_components(const DensityOperator& rho, Fn&& fn) {
  DensityOperator out(rho.modes(), rho.max_photons());
  for (const auto& c : rho.components()) {
    out.add_component(c.weight, fn(c.state));
  }
  return out;
}

}  // namespace

std::vector<ClickPattern> desirable_patterns() {
  return {ClickPattern::parse("0011"), ClickPattern::parse("1100"),
          ClickPattern::parse("1001"), ClickPattern::parse("0110")};
}

std::map<ClickPattern, std::pair<int, int>> desirable_pattern_table(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("desirable_pattern_table: sign must be +-1");
  }
  std::map<ClickPattern, std::pair<int, int>> table;
  table[ClickPattern::parse("0011")] = {0, 0};
  table[ClickPattern::parse("1100")] = {0, 1};
  table[ClickPattern::parse("1001")] = {1, 1};
  table[ClickPattern::parse("0110")] = {1, 0};
  if (sign == -1) {
    for (auto& [pattern, m] : table) m.second ^= 1;
  }
  return table;
}

std::map<ClickPattern, std::pair<int, int>> realized_pattern_table(int sign) {
  auto table = desirable_pattern_table(sign);
  for (auto& [pattern, m] : table) {
    if (m.first == 1) m.second ^= 1;
  }
  return table;
}

CascadeResult run_cascade(const CascadeConfig& config) {
  if (config.eta_c < 0.0 || config.eta_c > 1.0) {
    throw std::invalid_argument("run_cascade: eta_c outside [0, 1]");
  }
  std::vector<ClickPattern> accepted = config.accepted;
  if (accepted.empty()) {
    accepted = {ClickPattern::parse("0011"), ClickPattern::parse("1100")};
  }
  auto canonical = desirable_pattern_table(config.source.sign);
  for (const auto& pattern : accepted) {
    if (!canonical.count(pattern)) {
      throw std::invalid_argument(
          "run_cascade: accepted pattern is not one of the four desirable "
          "two-click patterns");
    }
  }

  CascadeResult result;
  result.warnings = source_warnings(config.source);

  PureState source = truncated_source_state(config.source);
  int cap = config.joint_max_photons.value_or(2 * source.max_photons());
  double dropped = 0.0;
  PureState joint = tensor(source, source, cap, &dropped);
  result.drop_weight = dropped;
  if (dropped > 1e-6) {
    std::ostringstream os;
    os << "joint-state truncation dropped probability mass " << dropped;
    result.warnings.push_back(os.str());
  }

  DensityOperator rho(joint);
  for (int m : kInnerModes) {
    if (config.eta_c < 1.0) {
      rho = attenuate(rho, AttenuationSpec{m, config.eta_c});
    }
  }
  rho = map_components(rho, through_bsm);

  const std::vector<int> detectors(std::begin(kInnerModes),
                                   std::end(kInnerModes));
  const PureState target = bell_psi(+1);
  const int outer_cap = 2 * source.max_photons();

  DensityOperator mixture(4, outer_cap);
  for (const auto& pattern : accepted) {
    MeasurementOutcome outcome =
        measure_pattern(rho, detectors, config.detector, pattern);
    HeraldRecord record;
    record.pattern = pattern;
    auto [m1, m2] = canonical.at(pattern);
    record.m1 = m1;
    record.m2 = m2;
    record.probability = outcome.probability;
    DensityOperator state = outcome.state.with_max_photons(outer_cap);
    if (config.correct_m1_phase && m1 == 1) {
      state = map_components(state, [](const PureState& psi) {
        return apply_phase(psi, 1, M_PI);
      });
    }
    record.fidelity =
        outcome.probability > 0.0 ? fidelity_pure(state, target) : 0.0;
    for (const auto& c : state.components()) {
      mixture.add_component(record.probability * c.weight, c.state);
    }
    record.state = std::move(state);
    result.records.push_back(std::move(record));
    result.p_accept_sum += outcome.probability;
  }

  result.p_gen = result.p_accept_sum / 2.0;
  if (result.p_accept_sum > 0.0) {
    mixture.normalize();
    result.fidelity = fidelity_pure(mixture, target);
  }
  result.heralded = std::move(mixture);
  return result;
}

double spurious_ratio_cascaded(double n_s) {
  if (n_s <= 0.0) {
    throw std::invalid_argument("spurious_ratio_cascaded: n_s must be > 0");
  }
  double p0 = pair_prob(0, n_s);
  double p1 = pair_prob(1, n_s);
  double p2 = pair_prob(2, n_s);
  return 4.0 * p0 * p2 / (3.0 * p1 * p1);
}

std::vector<PatternTableRow> emit_pattern_table(int order) {
  if (order < 0) {
    throw std::invalid_argument("emit_pattern_table: negative order");
  }
  // Basis kets of the truncated source, by pair number.
  std::vector<std::pair<int, FockKet>> source_kets;
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      source_kets.emplace_back(n, FockKet({n - k, k, k, n - k}));
    }
  }

  const std::vector<int> outer(std::begin(kOuterModes), std::end(kOuterModes));
  const std::vector<int> inner(std::begin(kInnerModes), std::end(kInnerModes));

  std::vector<PatternTableRow> rows;
  for (const auto& [n1, ket1] : source_kets) {
    for (const auto& [n2, ket2] : source_kets) {
      if (n1 + n2 > order) continue;
      PureState joint =
          PureState::basis_state(ket1.concat(ket2), 2 * (n1 + n2));
      PureState out = through_bsm(joint);
      for (const auto& [ket, amp] : out.terms()) {
        PatternTableRow row;
        row.source1 = ket1;
        row.source2 = ket2;
        row.coeff = amp.real();
        if (std::abs(amp.imag()) > 1e-12) {
          throw std::logic_error("emit_pattern_table: non-real amplitude");
        }
        row.output = ket;
        row.pattern = ClickPattern(ket.select(inner).occupations());
        row.heralded = ket.select(outer);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace heraldsim

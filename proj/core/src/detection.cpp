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

#include "heraldsim/detection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "internal_math.hpp"

namespace heraldsim {

int ClickPattern::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string ClickPattern::str() const {
  std::string s;
  for (int c : counts) {
    if (c < 0 || c > 9) {
      s += "[" + std::to_string(c) + "]";
    } else {
      s += static_cast<char>('0' + c);
    }
  }
  return s;
}

ClickPattern ClickPattern::parse(const std::string& text) {
  std::vector<int> counts;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '[') {
      std::size_t end = text.find(']', i);
      if (end == std::string::npos) {
        throw std::invalid_argument("ClickPattern::parse: unterminated '['");
      }
      counts.push_back(std::stoi(text.substr(i + 1, end - i - 1)));
      i = end;
    } else if (ch >= '0' && ch <= '9') {
      counts.push_back(ch - '0');
    } else {
      throw std::invalid_argument("ClickPattern::parse: bad character");
    }
  }
  return ClickPattern(std::move(counts));
}

namespace {

void check_params(const DetectorParams& p) {
  if (p.eta_d < 0.0 || p.eta_d > 1.0) {
    throw std::invalid_argument("DetectorParams: eta_d outside [0, 1]");
  }
  if (p.p_dark < 0.0 || p.p_dark >= 1.0) {
    throw std::invalid_argument("DetectorParams: p_dark outside [0, 1)");
  }
}

}  // namespace

double registered_prob(const DetectorParams& params, int n, int registered) {
  check_params(params);
  if (n < 0) throw std::invalid_argument("registered_prob: negative n");
  if (registered < 0) return 0.0;
  double p = 0.0;
  for (int j = 0; j <= 1; ++j) {
    int k = registered - j;
    if (k < 0 || k > n) continue;
    double dark = j ? params.p_dark : (1.0 - params.p_dark);
    p += dark * detail::loss_prob(n, k, params.eta_d);
  }
  return p;
}

DiagonalPovm povm_element(const DetectorParams& params, int registered,
                          int max_n) {
  check_params(params);
  if (registered < 0) {
    throw std::invalid_argument("povm_element: negative registered count");
  }
  if (max_n < 0) throw std::invalid_argument("povm_element: negative max_n");
  DiagonalPovm povm;
  povm.diag.resize(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    povm.diag[n] = registered_prob(params, n, registered);
  }
  return povm;
}

namespace {

struct BankSetup {
  std::vector<int> detectors;
  std::vector<int> kept;
};

BankSetup make_setup(const DensityOperator& rho,
                     const std::vector<int>& detector_modes) {
  BankSetup setup;
  setup.detectors = detector_modes;
  std::vector<int> sorted = detector_modes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("measure_bank: duplicate detector mode");
  }
  for (int m : sorted) {
    if (m < 0 || m >= rho.modes()) {
      throw std::out_of_range("measure_bank: detector mode out of range");
    }
  }
  for (int m = 0; m < rho.modes(); ++m) {
    if (!std::binary_search(sorted.begin(), sorted.end(), m)) {
      setup.kept.push_back(m);
    }
  }
  return setup;
}

// Groups a pure state by the occupations seen by the detectors; the
// conditioned reduced state keeps no coherence across distinct detected
// occupations.
std::map<FockKet, PureState> group_by_detected(const PureState& psi,
                                               const BankSetup& setup,
                                               int kept_cap) {
  std::map<FockKet, PureState> groups;
  for (const auto& [ket, amp] : psi.terms()) {
    FockKet det = ket.select(setup.detectors);
    auto [it, inserted] = groups.try_emplace(
        det, PureState(static_cast<int>(setup.kept.size()), kept_cap));
    it->second.add(ket.select(setup.kept), amp);
  }
  return groups;
}

void enumerate_patterns(const FockKet& detected, const DetectorParams& params,
                        std::vector<int>& counts, std::size_t pos, double w,
                        const std::function<void(const ClickPattern&, double)>&
                            sink) {
  if (w <= 0.0) return;
  if (pos == counts.size()) {
    sink(ClickPattern(counts), w);
    return;
  }
  int n = detected[static_cast<int>(pos)];
  for (int r = 0; r <= n + 1; ++r) {
    double pr = registered_prob(params, n, r);
    if (pr <= 0.0) continue;
    counts[pos] = r;
    enumerate_patterns(detected, params, counts, pos + 1, w * pr, sink);
  }
  counts[pos] = 0;
}

}  // namespace

std::map<ClickPattern, MeasurementOutcome> measure_bank(
    const DensityOperator& rho, const std::vector<int>& detector_modes,
    const DetectorParams& params) {
  check_params(params);
  BankSetup setup = make_setup(rho, detector_modes);

  std::map<ClickPattern, double> probs;
  std::map<ClickPattern, DensityOperator> states;
  for (const auto& c : rho.components()) {
    auto groups = group_by_detected(c.state, setup, rho.max_photons());
    for (const auto& [det, psi] : groups) {
      std::vector<int> counts(detector_modes.size(), 0);
      enumerate_patterns(
          det, params, counts, 0, 1.0,
          [&](const ClickPattern& pat, double w) {
            double mass = c.weight * w * psi.norm2();
            if (mass < 1e-300) return;
            probs[pat] += mass;
            auto [it, inserted] = states.try_emplace(
                pat, DensityOperator(static_cast<int>(setup.kept.size()),
                                     rho.max_photons()));
            it->second.add_component(c.weight * w, psi);
          });
    }
  }

  std::map<ClickPattern, MeasurementOutcome> out;
  for (auto& [pat, p] : probs) {
    DensityOperator s = states.at(pat);
    s.normalize();
    out.emplace(pat, MeasurementOutcome(p, std::move(s)));
  }
  return out;
}

MeasurementOutcome measure_pattern(const DensityOperator& rho,
                                   const std::vector<int>& detector_modes,
                                   const DetectorParams& params,
                                   const ClickPattern& pattern) {
  check_params(params);
  BankSetup setup = make_setup(rho, detector_modes);
  if (pattern.detectors() != static_cast<int>(detector_modes.size())) {
    throw std::invalid_argument("measure_pattern: pattern length mismatch");
  }

  double prob = 0.0;
  DensityOperator cond(static_cast<int>(setup.kept.size()),
                       rho.max_photons());
  for (const auto& c : rho.components()) {
    auto groups = group_by_detected(c.state, setup, rho.max_photons());
    for (const auto& [det, psi] : groups) {
      double w = 1.0;
      for (int m = 0; m < det.modes(); ++m) {
        w *= registered_prob(params, det[m], pattern.counts[m]);
        if (w <= 0.0) break;
      }
      if (w <= 0.0) continue;
      prob += c.weight * w * psi.norm2();
      cond.add_component(c.weight * w, psi);
    }
  }
  if (prob > 0.0) cond.normalize();
  return MeasurementOutcome(prob, std::move(cond));
}

}  // namespace heraldsim

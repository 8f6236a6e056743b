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

#ifndef HERALDSIM_DETECTION_HPP_
#define HERALDSIM_DETECTION_HPP_

#include <map>
#include <string>
#include <vector>

#include "heraldsim/fock.hpp"

namespace heraldsim {

/// Two-parameter photon-number-resolving detector: sub-unity efficiency
/// eta_d plus a Bernoulli dark click (at most one extra registered count per
/// gate). A registered count r on true occupation n decomposes as
/// r = k + j with k detected photons and dark bit j in {0, 1}.
struct DetectorParams {
  double eta_d = 1.0;
  double p_dark = 0.0;
};

/// Registered counts, one entry per detector.
struct ClickPattern {
  std::vector<int> counts;

  ClickPattern() = default;
  explicit ClickPattern(std::vector<int> c) : counts(std::move(c)) {}

  int detectors() const { return static_cast<int>(counts.size()); }
  int total() const;

  auto operator<=>(const ClickPattern&) const = default;

  std::string str() const;                        // e.g. "0011"
  static ClickPattern parse(const std::string&);  // inverse of str()
};

/// P(register r counts | n photons arrive), summed over loss and dark-bit
/// decompositions.
double registered_prob(const DetectorParams& params, int n, int registered);

/// Diagonal POVM element Pi_r on a single mode truncated at max_n photons:
/// diag[n] = <n|Pi_r|n>. Sums to the identity over r = 0..max_n+1.
struct DiagonalPovm {
  std::vector<double> diag;
};
DiagonalPovm povm_element(const DetectorParams& params, int registered,
                          int max_n);

struct MeasurementOutcome {
  double probability = 0.0;
  DensityOperator state;  // normalized, on the undetected modes

  MeasurementOutcome() : state(0, 0) {}
  MeasurementOutcome(double p, DensityOperator s)
      : probability(p), state(std::move(s)) {}
};

/// Measures every mode in `detector_modes` with identical detectors and
/// returns the outcome distribution together with the conditioned states on
/// the remaining modes. Probabilities over all patterns sum to trace(rho).
std::map<ClickPattern, MeasurementOutcome> measure_bank(
    const DensityOperator& rho, const std::vector<int>& detector_modes,
    const DetectorParams& params);

/// Single-pattern conditioning; equals the corresponding measure_bank entry.
MeasurementOutcome measure_pattern(const DensityOperator& rho,
                                   const std::vector<int>& detector_modes,
                                   const DetectorParams& params,
                                   const ClickPattern& pattern);

}  // namespace heraldsim

#endif  // HERALDSIM_DETECTION_HPP_

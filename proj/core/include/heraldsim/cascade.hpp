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

#ifndef HERALDSIM_CASCADE_HPP_
#define HERALDSIM_CASCADE_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heraldsim/detection.hpp"
#include "heraldsim/fock.hpp"
#include "heraldsim/spdc.hpp"

namespace heraldsim {

// Two copies of the source feed a beamsplitter Bell measurement. Joint mode
// layout (8 modes):
//   0..3  source 1: (outer H, outer V, inner H, inner V)
//   4..7  source 2: (inner H, inner V, outer H, outer V)
// The inner modes 2,3,4,5 meet the two 50:50 beamsplitters (H with H, V
// with V) and are read by detectors d1..d4 in that mode order. The four
// outer modes 0,1,6,7 carry the heralded state |a,b;c,d>.

/// The four desirable two-click patterns.
std::vector<ClickPattern> desirable_patterns();

/// Canonical (m1, m2) labels of the desirable patterns:
/// 0011->(0,0), 1100->(0,1), 1001->(1,1), 0110->(1,0). Building both
/// sources with sign -1 flips every m2.
std::map<ClickPattern, std::pair<int, int>> desirable_pattern_table(
    int sign = +1);

/// (m1, m2) labels realized by the implemented beamsplitter convention:
/// same m1 as the canonical table, m2 flipped on the m1 = 1 patterns.
/// m1 fixes the relative sign inside the Bell pair and is what the
/// corrective phase acts on; m2 is bookkeeping only.
std::map<ClickPattern, std::pair<int, int>> realized_pattern_table(
    int sign = +1);

struct CascadeConfig {
  SourceParams source;
  double eta_c = 1.0;            // coupling into the BSM, per inner mode
  DetectorParams detector;
  std::vector<ClickPattern> accepted;  // default {0011, 1100}
  bool correct_m1_phase = true;  // rotate m1 = 1 branches onto the + pair
  std::optional<int> joint_max_photons;  // override for truncation studies
};

struct HeraldRecord {
  ClickPattern pattern;
  int m1 = 0;
  int m2 = 0;              // canonical labels
  double probability = 0.0;
  DensityOperator state;   // normalized, 4 outer modes, phase-corrected
  double fidelity = 0.0;   // against (|1,0;0,1> + |0,1;1,0>)/sqrt(2)

  HeraldRecord() : state(4, 4) {}
};

struct CascadeResult {
  std::vector<HeraldRecord> records;
  double p_accept_sum = 0.0;  // total probability of the accepted patterns
  // Generation probability: half the accepted-pattern mass, i.e. the
  // per-pattern value for the default two-pattern acceptance (the two
  // patterns of a heralded class have equal probability by symmetry).
  double p_gen = 0.0;
  DensityOperator heralded;   // probability-weighted mixture, normalized
  double fidelity = 0.0;      // of the mixture
  double drop_weight = 0.0;   // squared-amplitude mass lost to truncation
  std::vector<std::string> warnings;

  CascadeResult() : heralded(4, 4) {}
};

CascadeResult run_cascade(const CascadeConfig& config);

/// Two-pair to Bell-pair weight ratio of the heralded state,
/// 4 p(0) p(2) / (3 p(1)^2); identically 1 under the 2-pair truncation.
double spurious_ratio_cascaded(double n_s);

/// One branch of the ideal-device expansion: a product of source basis kets
/// sent through the beamsplitters.
struct PatternTableRow {
  FockKet source1;       // 4-mode input ket of source 1
  FockKet source2;       // 4-mode input ket of source 2
  double coeff = 0.0;    // branch amplitude (real in this convention)
  FockKet output;        // 8-mode ket after the beamsplitters
  ClickPattern pattern;  // ideal detector counts
  FockKet heralded;      // 4 outer modes
};

/// Expands every ordered pair of source kets with at most `order` total
/// photon pairs through the ideal BSM.
std::vector<PatternTableRow> emit_pattern_table(int order = 2);

}  // namespace heraldsim

#endif  // HERALDSIM_CASCADE_HPP_

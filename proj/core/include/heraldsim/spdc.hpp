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

#ifndef HERALDSIM_SPDC_HPP_
#define HERALDSIM_SPDC_HPP_

#include <string>
#include <vector>

#include "heraldsim/fock.hpp"

namespace heraldsim {

/// Parameters of one dual-rail entanglement source.
///
/// The 4-mode layout is (pulse1 H, pulse1 V, pulse2 H, pulse2 V); a basis
/// ket |a,b;c,d> stores occupations in that order.
struct SourceParams {
  double n_s = 0.1;     // mean photon number per mode
  int sign = +1;        // +1 or -1, the relative phase of the odd terms
  int pair_cutoff = 2;  // max photon pairs retained
};

/// Pair-number distribution p(n) = (n+1) n_s^n / (n_s+1)^(n+2).
double pair_prob(int n, double n_s);

/// 1 / sqrt(sum_{n<=cutoff} p(n)); the truncation renormalization. For
/// cutoff 2 this equals (n_s+1)^2 / sqrt(6 n_s^2 + 4 n_s + 1).
double source_normalization(double n_s, int pair_cutoff);

/// The truncated 4-mode source state: coefficients
/// N * sign^k * sqrt(p(n)/(n+1)) on |n-k,k;k,n-k> for n <= pair_cutoff.
PureState truncated_source_state(const SourceParams& params);

/// The same state built constructively: two two-mode squeezed vacua expanded
/// to `max_pairs` pairs each, middle beams swapped, and a phase beta (0 or
/// pi) on one swapped arm. Truncated to `max_pairs` total pairs and NOT
/// renormalized; the n=0 limit is vacuum with amplitude sqrt(p(0)).
PureState tmsv_swapped_state(double n_s, int max_pairs, double beta);

/// Ratio of two-pair to single-pair content for the raw source,
/// 2 p(2)/p(1) = 3 n_s/(n_s+1).
double spurious_ratio_original(double n_s);

/// Dual-rail Bell state (|1,0;0,1> + sign |0,1;1,0>)/sqrt(2).
PureState bell_psi(int sign = +1);

/// Non-fatal diagnostics (the truncation degrades for n_s above ~0.2).
std::vector<std::string> source_warnings(const SourceParams& params);

}  // namespace heraldsim

#endif  // HERALDSIM_SPDC_HPP_

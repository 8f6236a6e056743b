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

#include "heraldsim/spdc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "heraldsim/channels.hpp"

namespace heraldsim {

double pair_prob(int n, double n_s) {
  if (n < 0) throw std::invalid_argument("pair_prob: negative n");
  if (n_s < 0.0) throw std::invalid_argument("pair_prob: negative n_s");
  if (n_s == 0.0) return n == 0 ? 1.0 : 0.0;
  return (n + 1) * std::pow(n_s, n) / std::pow(n_s + 1.0, n + 2);
}

double source_normalization(double n_s, int pair_cutoff) {
  if (pair_cutoff < 0) {
    throw std::invalid_argument("source_normalization: negative cutoff");
  }
  double mass = 0.0;
  for (int n = 0; n <= pair_cutoff; ++n) mass += pair_prob(n, n_s);
  return 1.0 / std::sqrt(mass);
}

PureState truncated_source_state(const SourceParams& params) {
  if (params.n_s <= 0.0) {
    throw std::invalid_argument("truncated_source_state: n_s must be > 0");
  }
  if (params.sign != 1 && params.sign != -1) {
    throw std::invalid_argument("truncated_source_state: sign must be +-1");
  }
  if (params.pair_cutoff < 0) {
    throw std::invalid_argument("truncated_source_state: negative cutoff");
  }
  const double norm = source_normalization(params.n_s, params.pair_cutoff);
  PureState state(4, 2 * params.pair_cutoff);
  for (int n = 0; n <= params.pair_cutoff; ++n) {
    double base = norm * std::sqrt(pair_prob(n, params.n_s) / (n + 1));
    for (int k = 0; k <= n; ++k) {
      double s = (k % 2 == 0) ? 1.0 : static_cast<double>(params.sign);
      state.add(FockKet({n - k, k, k, n - k}), s * base);
    }
  }
  return state;
}

PureState tmsv_swapped_state(double n_s, int max_pairs, double beta) {
  if (max_pairs < 0) {
    throw std::invalid_argument("tmsv_swapped_state: negative pair order");
  }
  if (n_s < 0.0) {
    throw std::invalid_argument("tmsv_swapped_state: negative n_s");
  }
  PureState tmsv(2, 2 * max_pairs);
  for (int n = 0; n <= max_pairs; ++n) {
    double amp = std::sqrt(std::pow(n_s, n) / std::pow(n_s + 1.0, n + 1));
    tmsv.add(FockKet({n, n}), amp);
  }
  double dropped = 0.0;
  PureState joint = tensor(tmsv, tmsv, 2 * max_pairs, &dropped);
  // Modes before the swap: (a1, b1, a2, b2); output order (a1, a2, b2, b1).
  joint = swap_modes(joint, {0, 2, 3, 1});
  return apply_phase(joint, 1, beta);
}

double spurious_ratio_original(double n_s) {
  if (n_s < 0.0) {
    throw std::invalid_argument("spurious_ratio_original: negative n_s");
  }
  return 3.0 * n_s / (n_s + 1.0);
}

PureState bell_psi(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("bell_psi: sign must be +-1");
  }
  PureState psi(4, 2);
  psi.add(FockKet({1, 0, 0, 1}), 1.0 / std::sqrt(2.0));
  psi.add(FockKet({0, 1, 1, 0}), sign / std::sqrt(2.0));
  return psi;
}

std::vector<std::string> source_warnings(const SourceParams& params) {
  std::vector<std::string> warnings;
  if (params.n_s > 0.2) {
    std::ostringstream os;
    os << "n_s = " << params.n_s
       << " exceeds 0.2; the " << params.pair_cutoff
       << "-pair truncation becomes a poor approximation";
    warnings.push_back(os.str());
  }
  return warnings;
}

}  // namespace heraldsim

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

#ifndef HERALDSIM_CHANNELS_HPP_
#define HERALDSIM_CHANNELS_HPP_

#include <string>
#include <variant>
#include <vector>

#include "heraldsim/fock.hpp"

namespace heraldsim {

/// Two-mode beamsplitter. Creation operators transform as
///   a' = t a + r b,   b' = r a - t b,
/// with t = sqrt(transmissivity), r = sqrt(1 - transmissivity); `a` lives on
/// mode_a and `b` on mode_b. The map is an involution: applying the same
/// spec twice restores the input.
struct BeamsplitterSpec {
  int mode_a = 0;
  int mode_b = 1;
  double transmissivity = 0.5;
};

/// Single-mode pure-loss channel of transmissivity eta.
struct AttenuationSpec {
  int mode = 0;
  double eta = 1.0;
};

PureState apply_beamsplitter(const PureState& state,
                             const BeamsplitterSpec& spec);

/// Multiplies each term by exp(i * phi * n_mode).
PureState apply_phase(const PureState& state, int mode, double phi);

/// Reorders occupations: result occupation i = input occupation perm[i].
PureState swap_modes(const PureState& state, const std::vector<int>& perm);

/// Photon-loss channel via the binomial Kraus decomposition.
DensityOperator attenuate(const DensityOperator& rho,
                          const AttenuationSpec& spec);
DensityOperator attenuate(const PureState& psi, const AttenuationSpec& spec);

/// Same channel on every mode.
DensityOperator attenuate_all_modes(const DensityOperator& rho, double eta);

/// Loss realized as a beamsplitter onto an appended vacuum mode followed by
/// a partial trace over it. Kept as an independent cross-check of
/// attenuate().
DensityOperator attenuate_via_ancilla(const DensityOperator& rho,
                                      const AttenuationSpec& spec);

/// One step of a scripted linear-optics pipeline.
struct CircuitOp {
  enum class Kind { kBeamsplitter, kPhase, kLoss, kSwap };
  Kind kind = Kind::kBeamsplitter;
  BeamsplitterSpec bs;                 // kBeamsplitter
  int mode = 0;                        // kPhase
  double phi = 0.0;                    // kPhase
  AttenuationSpec loss;                // kLoss
  std::vector<int> perm;               // kSwap
};

DensityOperator apply_circuit(const DensityOperator& rho,
                              const std::vector<CircuitOp>& ops);

}  // namespace heraldsim

#endif  // HERALDSIM_CHANNELS_HPP_

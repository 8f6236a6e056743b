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

#include "heraldsim/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "internal_math.hpp"

namespace heraldsim {

PureState apply_beamsplitter(const PureState& state,
                             const BeamsplitterSpec& spec) {
  if (spec.mode_a == spec.mode_b) {
    throw std::invalid_argument("apply_beamsplitter: identical modes");
  }
  if (spec.mode_a < 0 || spec.mode_a >= state.modes() || spec.mode_b < 0 ||
      spec.mode_b >= state.modes()) {
    throw std::out_of_range("apply_beamsplitter: mode index out of range");
  }
  if (spec.transmissivity < 0.0 || spec.transmissivity > 1.0) {
    throw std::invalid_argument("apply_beamsplitter: transmissivity range");
  }
  const double t = std::sqrt(spec.transmissivity);
  const double r = std::sqrt(1.0 - spec.transmissivity);

  PureState out(state.modes(), state.max_photons());
  for (const auto& [ket, amp] : state.terms()) {
    const int na = ket[spec.mode_a];
    const int nb = ket[spec.mode_b];
    const int n = na + nb;
    if (n == 0) {
      out.add(ket, amp);
      continue;
    }
    // (t a + r b)^na (r a - t b)^nb expanded over output occupations (k, n-k).
    std::vector<cxd> coeff(n + 1, 0.0);
    for (int i = 0; i <= na; ++i) {
      for (int j = 0; j <= nb; ++j) {
        double c = detail::binomial(na, i) * detail::binomial(nb, j) *
                   std::pow(t, i) * std::pow(r, na - i) * std::pow(r, j) *
                   std::pow(-t, nb - j);
        coeff[i + j] += c;
      }
    }
    const double in_norm =
        std::sqrt(detail::factorial(na) * detail::factorial(nb));
    for (int k = 0; k <= n; ++k) {
      if (std::abs(coeff[k]) < kAmplitudePruneTol) continue;
      double out_norm =
          std::sqrt(detail::factorial(k) * detail::factorial(n - k));
      FockKet kk =
          ket.with_occupation(spec.mode_a, k).with_occupation(spec.mode_b, n - k);
      out.add(kk, amp * coeff[k] * out_norm / in_norm);
    }
  }
  return out;
}

PureState apply_phase(const PureState& state, int mode, double phi) {
  if (mode < 0 || mode >= state.modes()) {
    throw std::out_of_range("apply_phase: mode index out of range");
  }
  PureState out(state.modes(), state.max_photons());
  for (const auto& [ket, amp] : state.terms()) {
    out.add(ket, amp * std::exp(cxd(0.0, phi * ket[mode])));
  }
  return out;
}

PureState swap_modes(const PureState& state, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != state.modes()) {
    throw std::invalid_argument("swap_modes: permutation size mismatch");
  }
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= state.modes() || seen[p]) {
      throw std::invalid_argument("swap_modes: not a permutation");
    }
    seen[p] = true;
  }
  PureState out(state.modes(), state.max_photons());
  for (const auto& [ket, amp] : state.terms()) {
    std::vector<int> occ(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) occ[i] = ket[perm[i]];
    out.add(FockKet(std::move(occ)), amp);
  }
  return out;
}

namespace {

void check_eta(double eta) {
  if (eta < 0.0 || eta > 1.0) {
    throw std::invalid_argument("attenuate: eta outside [0, 1]");
  }
}

// K_l |n> = sqrt(C(n,l) eta^(n-l) (1-eta)^l) |n-l>
PureState loss_kraus_branch(const PureState& psi, int mode, int lost,
                            double eta) {
  PureState out(psi.modes(), psi.max_photons());
  for (const auto& [ket, amp] : psi.terms()) {
    const int n = ket[mode];
    if (lost > n) continue;
    double w = detail::binomial(n, lost) * std::pow(eta, n - lost) *
               std::pow(1.0 - eta, lost);
    if (w <= 0.0) continue;
    out.add(ket.with_occupation(mode, n - lost), amp * std::sqrt(w));
  }
  return out;
}

}  // namespace

DensityOperator attenuate(const DensityOperator& rho,
                          const AttenuationSpec& spec) {
  check_eta(spec.eta);
  if (spec.mode < 0 || spec.mode >= rho.modes()) {
    throw std::out_of_range("attenuate: mode index out of range");
  }
  if (spec.eta == 1.0) return rho;
  DensityOperator out(rho.modes(), rho.max_photons());
  for (const auto& c : rho.components()) {
    int max_n = 0;
    for (const auto& [ket, amp] : c.state.terms()) {
      max_n = std::max(max_n, ket[spec.mode]);
    }
    for (int lost = 0; lost <= max_n; ++lost) {
      out.add_component(c.weight,
                        loss_kraus_branch(c.state, spec.mode, lost, spec.eta));
    }
  }
  return out;
}

DensityOperator attenuate(const PureState& psi, const AttenuationSpec& spec) {
  return attenuate(DensityOperator(psi), spec);
}

DensityOperator attenuate_all_modes(const DensityOperator& rho, double eta) {
  check_eta(eta);
  if (eta == 1.0) return rho;
  DensityOperator out = rho;
  for (int m = 0; m < rho.modes(); ++m) {
    out = attenuate(out, AttenuationSpec{m, eta});
  }
  return out;
}

DensityOperator attenuate_via_ancilla(const DensityOperator& rho,
                                      const AttenuationSpec& spec) {
  check_eta(spec.eta);
  if (spec.mode < 0 || spec.mode >= rho.modes()) {
    throw std::out_of_range("attenuate_via_ancilla: mode out of range");
  }
  DensityOperator mixed(rho.modes() + 1, rho.max_photons());
  PureState anc_vac = PureState::vacuum(1, 0);
  for (const auto& c : rho.components()) {
    PureState ext = tensor(c.state, anc_vac);
    ext = apply_beamsplitter(
        ext, BeamsplitterSpec{spec.mode, rho.modes(), spec.eta});
    mixed.add_component(c.weight, ext);
  }
  std::vector<int> keep;
  for (int m = 0; m < rho.modes(); ++m) keep.push_back(m);
  return partial_trace(mixed, keep).with_max_photons(rho.max_photons());
}

DensityOperator apply_circuit(const DensityOperator& rho,
                              const std::vector<CircuitOp>& ops) {
  DensityOperator out = rho;
  for (const auto& op : ops) {
    switch (op.kind) {
      case CircuitOp::Kind::kBeamsplitter: {
        DensityOperator next(out.modes(), out.max_photons());
        for (const auto& c : out.components()) {
          next.add_component(c.weight, apply_beamsplitter(c.state, op.bs));
        }
        out = std::move(next);
        break;
      }
      case CircuitOp::Kind::kPhase: {
        DensityOperator next(out.modes(), out.max_photons());
        for (const auto& c : out.components()) {
          next.add_component(c.weight, apply_phase(c.state, op.mode, op.phi));
        }
        out = std::move(next);
        break;
      }
      case CircuitOp::Kind::kLoss:
        out = attenuate(out, op.loss);
        break;
      case CircuitOp::Kind::kSwap: {
        DensityOperator next(out.modes(), out.max_photons());
        for (const auto& c : out.components()) {
          next.add_component(c.weight, swap_modes(c.state, op.perm));
        }
        out = std::move(next);
        break;
      }
    }
  }
  return out;
}

}  // namespace heraldsim

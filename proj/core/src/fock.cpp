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

#include "heraldsim/fock.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace heraldsim {

FockKet::FockKet(std::vector<int> occupations) : occ_(std::move(occupations)) {
  for (int n : occ_) {
    if (n < 0) throw std::invalid_argument("FockKet: negative occupation");
  }
}

FockKet FockKet::vacuum(int modes) {
  if (modes < 0) throw std::invalid_argument("FockKet: negative mode count");
  return FockKet(std::vector<int>(modes, 0));
}

int FockKet::occupation(int mode) const {
  if (mode < 0 || mode >= modes()) {
    throw std::out_of_range("FockKet: mode index out of range");
  }
  return occ_[mode];
}

int FockKet::total_photons() const {
  int total = 0;
  for (int n : occ_) total += n;
  return total;
}

FockKet FockKet::select(const std::vector<int>& modes) const {
  std::vector<int> sub;
  sub.reserve(modes.size());
  for (int m : modes) sub.push_back(occupation(m));
  return FockKet(std::move(sub));
}

FockKet FockKet::concat(const FockKet& other) const {
  std::vector<int> occ = occ_;
  occ.insert(occ.end(), other.occ_.begin(), other.occ_.end());
  return FockKet(std::move(occ));
}

FockKet FockKet::with_occupation(int mode, int value) const {
  if (mode < 0 || mode >= modes()) {
    throw std::out_of_range("FockKet: mode index out of range");
  }
  if (value < 0) throw std::invalid_argument("FockKet: negative occupation");
  std::vector<int> occ = occ_;
  occ[mode] = value;
  return FockKet(std::move(occ));
}

std::string FockKet::str() const {
  std::ostringstream os;
  os << "|";
  for (int i = 0; i < modes(); ++i) {
    if (i) os << ",";
    os << occ_[i];
  }
  os << ">";
  return os.str();
}

namespace {

void enumerate_rec(int modes, int max_total, std::vector<int>& occ, int pos,
                   int used, std::vector<FockKet>& out) {
  if (pos == modes) {
    out.emplace_back(occ);
    return;
  }
  for (int n = 0; n <= max_total - used; ++n) {
    occ[pos] = n;
    enumerate_rec(modes, max_total, occ, pos + 1, used + n, out);
  }
  occ[pos] = 0;
}

}  // namespace

std::vector<FockKet> enumerate_kets(int modes, int max_total) {
  if (modes < 0 || max_total < 0) {
    throw std::invalid_argument("enumerate_kets: negative argument");
  }
  std::vector<FockKet> out;
  std::vector<int> occ(modes, 0);
  if (modes == 0) {
    out.push_back(FockKet::vacuum(0));
    return out;
  }
  enumerate_rec(modes, max_total, occ, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

int ket_index(const std::vector<FockKet>& basis, const FockKet& ket) {
  auto it = std::lower_bound(basis.begin(), basis.end(), ket);
  if (it == basis.end() || *it != ket) return -1;
  return static_cast<int>(it - basis.begin());
}

PureState::PureState(int modes, int max_photons)
    : modes_(modes), max_photons_(max_photons) {
  if (modes < 0) throw std::invalid_argument("PureState: negative mode count");
  if (max_photons < 0) {
    throw std::invalid_argument("PureState: negative photon cap");
  }
}

PureState PureState::vacuum(int modes, int max_photons) {
  PureState s(modes, max_photons);
  s.add(FockKet::vacuum(modes), 1.0);
  return s;
}

PureState PureState::basis_state(const FockKet& ket, int max_photons) {
  PureState s(ket.modes(), max_photons);
  s.add(ket, 1.0);
  return s;
}

cxd PureState::amplitude(const FockKet& ket) const {
  auto it = terms_.find(ket);
  return it == terms_.end() ? cxd(0.0) : it->second;
}

void PureState::add(const FockKet& ket, cxd amp) {
  if (ket.modes() != modes_) {
    throw std::invalid_argument("PureState::add: mode count mismatch");
  }
  if (ket.total_photons() > max_photons_) {
    throw std::invalid_argument("PureState::add: ket exceeds photon cap");
  }
  auto [it, inserted] = terms_.try_emplace(ket, amp);
  if (!inserted) it->second += amp;
  if (std::abs(it->second) < kAmplitudePruneTol) terms_.erase(it);
}

double PureState::norm2() const {
  double n2 = 0.0;
  for (const auto& [ket, amp] : terms_) n2 += std::norm(amp);
  return n2;
}

double PureState::norm() const { return std::sqrt(norm2()); }

PureState& PureState::normalize() {
  double n = norm();
  if (n <= 0.0) throw std::invalid_argument("PureState::normalize: zero norm");
  for (auto& [ket, amp] : terms_) amp /= n;
  return *this;
}

PureState& PureState::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PureState PureState::scaled(cxd factor) const {
  PureState out(modes_, max_photons_);
  for (const auto& [ket, amp] : terms_) out.add(ket, amp * factor);
  return out;
}

PureState PureState::with_max_photons(int max_photons) const {
  PureState out(modes_, max_photons);
  for (const auto& [ket, amp] : terms_) out.add(ket, amp);
  return out;
}

std::string PureState::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ket, amp] : terms_) {
    if (!first) os << " + ";
    os << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+")
       << std::abs(amp.imag()) << "i)" << ket.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

PureState tensor(const PureState& a, const PureState& b, int max_photons,
                 double* dropped_weight) {
  int cap = max_photons < 0 ? a.max_photons() + b.max_photons() : max_photons;
  PureState out(a.modes() + b.modes(), cap);
  double dropped = 0.0;
  for (const auto& [ka, aa] : a.terms()) {
    for (const auto& [kb, ab] : b.terms()) {
      cxd amp = aa * ab;
      if (ka.total_photons() + kb.total_photons() > cap) {
        dropped += std::norm(amp);
        continue;
      }
      out.add(ka.concat(kb), amp);
    }
  }
  if (dropped_weight) *dropped_weight = dropped;
  return out;
}

cxd inner(const PureState& a, const PureState& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("inner: mode count mismatch");
  }
  // Iterate over the smaller term map.
  const PureState& small = a.term_count() <= b.term_count() ? a : b;
  const PureState& large = a.term_count() <= b.term_count() ? b : a;
  cxd acc = 0.0;
  for (const auto& [ket, amp] : small.terms()) {
    cxd other = large.amplitude(ket);
    if (&small == &a) {
      acc += std::conj(amp) * other;
    } else {
      acc += std::conj(other) * amp;
    }
  }
  return acc;
}

double overlap2(const PureState& a, const PureState& b) {
  return std::norm(inner(a, b));
}

DensityOperator::DensityOperator(int modes, int max_photons)
    : modes_(modes), max_photons_(max_photons) {
  if (modes < 0) {
    throw std::invalid_argument("DensityOperator: negative mode count");
  }
  if (max_photons < 0) {
    throw std::invalid_argument("DensityOperator: negative photon cap");
  }
}

DensityOperator::DensityOperator(const PureState& psi)
    : modes_(psi.modes()), max_photons_(psi.max_photons()) {
  add_component(1.0, psi);
}

void DensityOperator::add_component(double weight, const PureState& psi) {
  if (psi.modes() != modes_) {
    throw std::invalid_argument("DensityOperator: mode count mismatch");
  }
  if (weight < 0.0) {
    throw std::invalid_argument("DensityOperator: negative weight");
  }
  double n2 = psi.norm2();
  double w = weight * n2;
  if (w < 1e-300) return;
  PureState unit = psi;
  unit.normalize();
  if (unit.max_photons() != max_photons_) {
    unit = unit.with_max_photons(max_photons_);
  }
  components_.push_back(Component{w, std::move(unit)});
}

double DensityOperator::trace() const {
  double t = 0.0;
  for (const auto& c : components_) t += c.weight;
  return t;
}

DensityOperator& DensityOperator::normalize() {
  double t = trace();
  if (t <= 0.0) {
    throw std::invalid_argument("DensityOperator::normalize: zero trace");
  }
  for (auto& c : components_) c.weight /= t;
  return *this;
}

DensityOperator DensityOperator::scaled(double factor) const {
  if (factor < 0.0) {
    throw std::invalid_argument("DensityOperator::scaled: negative factor");
  }
  DensityOperator out(modes_, max_photons_);
  for (const auto& c : components_) {
    out.components_.push_back(Component{c.weight * factor, c.state});
  }
  return out;
}

double DensityOperator::fidelity_with(const PureState& target) const {
  double f = 0.0;
  for (const auto& c : components_) f += c.weight * overlap2(target, c.state);
  return f;
}

std::vector<cxd> DensityOperator::to_dense(int max_photons) const {
  int cap = max_photons < 0 ? max_photons_ : max_photons;
  std::vector<FockKet> basis = enumerate_kets(modes_, cap);
  const std::size_t dim = basis.size();
  std::vector<cxd> dense(dim * dim, cxd(0.0));
  for (const auto& c : components_) {
    // Collect (index, amplitude) pairs once per component.
    std::vector<std::pair<int, cxd>> entries;
    entries.reserve(c.state.term_count());
    for (const auto& [ket, amp] : c.state.terms()) {
      int idx = ket_index(basis, ket);
      if (idx < 0) {
        throw std::invalid_argument("to_dense: ket exceeds requested cap");
      }
      entries.emplace_back(idx, amp);
    }
    for (const auto& [i, ai] : entries) {
      for (const auto& [j, aj] : entries) {
        dense[static_cast<std::size_t>(i) * dim + j] +=
            c.weight * ai * std::conj(aj);
      }
    }
  }
  return dense;
}

DensityOperator DensityOperator::from_dense(const std::vector<cxd>& dense,
                                            int modes, int max_photons) {
  std::vector<FockKet> basis = enumerate_kets(modes, max_photons);
  const std::size_t dim = basis.size();
  if (dense.size() != dim * dim) {
    throw std::invalid_argument("from_dense: size does not match basis");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = dense[i * dim + j];
    }
  }
  double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-10) {
    throw std::invalid_argument("from_dense: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (m + m.adjoint().eval()));
  DensityOperator out(modes, max_photons);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double lambda = es.eigenvalues()(k);
    if (lambda < -1e-10) {
      throw std::invalid_argument("from_dense: negative eigenvalue");
    }
    if (lambda <= 0.0) continue;
    PureState vec(modes, max_photons);
    for (std::size_t i = 0; i < dim; ++i) {
      cxd a = es.eigenvectors()(i, k);
      if (std::abs(a) >= kAmplitudePruneTol) vec.add(basis[i], a);
    }
    if (vec.empty()) continue;
    out.add_component(lambda / vec.norm2(), vec);
  }
  return out;
}

DensityOperator DensityOperator::with_max_photons(int max_photons) const {
  DensityOperator out(modes_, max_photons);
  for (const auto& c : components_) {
    out.add_component(c.weight, c.state.with_max_photons(max_photons));
  }
  return out;
}

double fidelity_pure(const DensityOperator& rho, const PureState& target) {
  if (rho.modes() != target.modes()) {
    throw std::invalid_argument("fidelity_pure: mode count mismatch");
  }
  return rho.fidelity_with(target);
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep_modes) {
  std::vector<int> keep = keep_modes;
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("partial_trace: duplicate keep index");
  }
  for (int m : keep) {
    if (m < 0 || m >= rho.modes()) {
      throw std::out_of_range("partial_trace: keep index out of range");
    }
  }
  std::vector<int> traced;
  for (int m = 0; m < rho.modes(); ++m) {
    if (!std::binary_search(keep.begin(), keep.end(), m)) traced.push_back(m);
  }

  DensityOperator out(static_cast<int>(keep.size()), rho.max_photons());
  for (const auto& c : rho.components()) {
    // |phi> = sum_t |t>_traced |psi_t>_keep  =>  rho_keep += w sum_t |psi_t><psi_t|
    std::map<FockKet, PureState> groups;
    for (const auto& [ket, amp] : c.state.terms()) {
      FockKet t = ket.select(traced);
      auto [it, inserted] = groups.try_emplace(
          t, PureState(static_cast<int>(keep.size()), rho.max_photons()));
      it->second.add(ket.select(keep), amp);
    }
    for (auto& [t, psi] : groups) {
      out.add_component(c.weight, psi);
    }
  }
  return out;
}

double dense_distance(const DensityOperator& a, const DensityOperator& b,
                      int max_photons) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("dense_distance: mode count mismatch");
  }
  int cap = max_photons < 0 ? std::max(a.max_photons(), b.max_photons())
                            : max_photons;
  std::vector<cxd> da = a.to_dense(cap);
  std::vector<cxd> db = b.to_dense(cap);
  double d = 0.0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    d = std::max(d, std::abs(da[i] - db[i]));
  }
  return d;
}

}  // namespace heraldsim

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

#ifndef HERALDSIM_FOCK_HPP_
#define HERALDSIM_FOCK_HPP_

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace heraldsim {

using cxd = std::complex<double>;

/// Amplitudes with magnitude below this are dropped from sparse states.
inline constexpr double kAmplitudePruneTol = 1e-15;

/// Occupation-number basis ket over a fixed list of optical modes.
///
/// Kets compare lexicographically on their occupation lists, which is also
/// the basis ordering used for dense matrices and serialization.
class FockKet {
 public:
  FockKet() = default;
  explicit FockKet(std::vector<int> occupations);

  static FockKet vacuum(int modes);

  int modes() const { return static_cast<int>(occ_.size()); }
  int occupation(int mode) const;
  int operator[](int mode) const { return occupation(mode); }
  int total_photons() const;

  const std::vector<int>& occupations() const { return occ_; }

  /// Sub-ket over the given mode indices, in the order given.
  FockKet select(const std::vector<int>& modes) const;
  /// Concatenated ket [this, other].
  FockKet concat(const FockKet& other) const;
  /// Copy with one occupation replaced.
  FockKet with_occupation(int mode, int value) const;

  auto operator<=>(const FockKet&) const = default;

  std::string str() const;  // e.g. "|1,0,0,1>"

 private:
  std::vector<int> occ_;
};

/// All kets on `modes` modes with total photon number <= max_total, in
/// lexicographic order.
std::vector<FockKet> enumerate_kets(int modes, int max_total);

/// Index of `ket` in enumerate_kets(modes, max_total); -1 when absent.
int ket_index(const std::vector<FockKet>& basis, const FockKet& ket);

/// Sparse multimode pure state: map from FockKet to complex amplitude.
///
/// `max_photons` is the photon-number truncation of the space the state
/// lives in; every stored ket satisfies total_photons() <= max_photons.
class PureState {
 public:
  PureState(int modes, int max_photons);

  static PureState vacuum(int modes, int max_photons);
  /// Single-ket state with amplitude 1.
  static PureState basis_state(const FockKet& ket, int max_photons);

  int modes() const { return modes_; }
  int max_photons() const { return max_photons_; }

  const std::map<FockKet, cxd>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  cxd amplitude(const FockKet& ket) const;
  /// Accumulates amp onto ket. Throws if the ket does not fit the space.
  void add(const FockKet& ket, cxd amp);

  double norm2() const;
  double norm() const;
  PureState& normalize();  // throws on zero norm
  PureState& prune(double tol = kAmplitudePruneTol);
  PureState scaled(cxd factor) const;

  /// Same state in a space with a different photon cap. Throws if a stored
  /// ket exceeds the new cap.
  PureState with_max_photons(int max_photons) const;

  std::string str() const;

 private:
  int modes_ = 0;
  int max_photons_ = 0;
  std::map<FockKet, cxd> terms_;
};

/// Tensor product. The result space cap defaults to the sum of the operand
/// caps (no terms dropped); a smaller explicit cap drops offending kets and
/// reports their squared-amplitude mass through `dropped_weight`.
PureState tensor(const PureState& a, const PureState& b, int max_photons = -1,
                 double* dropped_weight = nullptr);

/// <a|b>; conjugate-linear in `a`. Throws on mode-count mismatch.
cxd inner(const PureState& a, const PureState& b);

/// |<a|b>|^2.
double overlap2(const PureState& a, const PureState& b);

/// Mixed state as a weighted ensemble of unit-norm pure states.
///
/// Weights are non-negative; trace() is their sum. Conditioned (sub-
/// normalized) operators are represented by ensembles with trace < 1.
class DensityOperator {
 public:
  DensityOperator(int modes, int max_photons);
  explicit DensityOperator(const PureState& psi);  // weight = norm2(psi)

  struct Component {
    double weight;
    PureState state;  // unit norm
  };

  int modes() const { return modes_; }
  int max_photons() const { return max_photons_; }
  const std::vector<Component>& components() const { return components_; }

  /// Adds weight * |psi><psi| / norm2(psi); the norm of `psi` folds into
  /// the stored weight. Near-zero contributions are skipped.
  void add_component(double weight, const PureState& psi);

  double trace() const;
  DensityOperator& normalize();  // throws on zero trace
  DensityOperator scaled(double factor) const;

  /// <target|rho|target>.
  double fidelity_with(const PureState& target) const;

  /// Dense row-major matrix over enumerate_kets(modes, cap). The cap
  /// defaults to the operator's own max_photons.
  std::vector<cxd> to_dense(int max_photons = -1) const;

  /// Eigendecomposition of a dense Hermitian matrix back into an ensemble.
  /// Eigenvalues below -1e-10 are rejected; small negatives are clipped.
  static DensityOperator from_dense(const std::vector<cxd>& dense, int modes,
                                    int max_photons);

  DensityOperator with_max_photons(int max_photons) const;

 private:
  int modes_ = 0;
  int max_photons_ = 0;
  std::vector<Component> components_;
};

/// <target|rho|target>, Eq-style fidelity against a pure target state.
double fidelity_pure(const DensityOperator& rho, const PureState& target);

/// Reduced operator over `keep_modes` (treated as a set; result modes are in
/// ascending index order). An empty keep set yields a 0-mode operator whose
/// trace carries the full trace of `rho`.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep_modes);

/// Max absolute entrywise difference between the dense forms of two
/// operators over a common photon cap.
double dense_distance(const DensityOperator& a, const DensityOperator& b,
                      int max_photons = -1);

}  // namespace heraldsim

#endif  // HERALDSIM_FOCK_HPP_

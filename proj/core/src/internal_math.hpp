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

#ifndef HERALDSIM_INTERNAL_MATH_HPP_
#define HERALDSIM_INTERNAL_MATH_HPP_

#include <cmath>
#include <stdexcept>

namespace heraldsim::detail {

// Exact in double precision for the small photon numbers handled here.
inline double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// P(k photons survive out of n) through a transmissivity-eta loss channel.
inline double loss_prob(int n, int k, double eta) {
  if (k < 0 || k > n) return 0.0;
  return binomial(n, k) * std::pow(eta, k) * std::pow(1.0 - eta, n - k);
}

}  // namespace heraldsim::detail

#endif  // HERALDSIM_INTERNAL_MATH_HPP_

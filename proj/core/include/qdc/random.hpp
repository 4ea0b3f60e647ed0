// Copyright 2026 The quditcluster authors
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

#ifndef QDC_RANDOM_HPP
#define QDC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qdc/phase_vector.hpp"
#include "qdc/types.hpp"

namespace qdc {

// Seeded PRNG with hand-rolled distributions so that a given seed produces
// the same stream on every platform (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform();
  // Uniform integer in [0, n).
  int uniform_int(int n);
  // Standard normal via Box-Muller.
  double normal();

  // Angles uniform in [0, 2*pi).
  PhaseVector phase_vector(int d);
  // Normalized Gaussian-random state of the given total dimension.
  CVector state(int dim);
  // Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
  CMatrix unitary(int dim);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qdc

#endif  // QDC_RANDOM_HPP

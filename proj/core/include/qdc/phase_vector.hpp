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

#ifndef QDC_PHASE_VECTOR_HPP
#define QDC_PHASE_VECTOR_HPP

#include <vector>

#include "qdc/modmath.hpp"
#include "qdc/types.hpp"

namespace qdc {

// A vector of d angles (radians) parameterizing the diagonal gate
// Z(a) = sum_k e^{i a_k} |k><k|. Also carries the MUB phase vectors b_k.
struct PhaseVector {
  explicit PhaseVector(int d) : angles(d, 0.0) {}
  explicit PhaseVector(std::vector<double> a) : angles(std::move(a)) {}

  int size() const { return static_cast<int>(angles.size()); }
  double operator[](int k) const { return angles[k]; }
  double& operator[](int k) { return angles[k]; }

  std::vector<double> angles;
};

inline PhaseVector zero_phase_vector(int d) { return PhaseVector(d); }

// (z^k)_l = 2*pi*k*l/d, so that Z(z^k) = Z^k.
PhaseVector z_power_phase_vector(int d, int k);

// a -> -a, as angles.
PhaseVector negate_phase_vector(const PhaseVector& a);

// a^(l): a^(l)_k = a_{k-l mod d}. Satisfies Z(a) X^l = X^l Z(a^(l)).
PhaseVector shift_phase_vector(const PhaseVector& a, int l);

// a': a'_k = a_{c*k mod d} for a unit c. Satisfies Z(a) S_c = S_c Z(a').
PhaseVector scale_phase_vector(const PhaseVector& a, int c);

// a^(x,k): a^(x,k)_l = a_{k^{-1}*l mod d} for a unit k.
PhaseVector mub_index_phase_vector(const PhaseVector& a, int k);

}  // namespace qdc

#endif  // QDC_PHASE_VECTOR_HPP

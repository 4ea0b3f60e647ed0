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

#include "qdc/phase_vector.hpp"

#include <cmath>

namespace qdc {

PhaseVector z_power_phase_vector(int d, int k) {
  PhaseVector a(d);
  const int kk = mod_reduce(k, d);
  for (int l = 0; l < d; ++l)
    a[l] = 2.0 * M_PI * mod_reduce(static_cast<long long>(kk) * l, d) / d;
  return a;
}

PhaseVector negate_phase_vector(const PhaseVector& a) {
  PhaseVector out(a.size());
  for (int k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}

PhaseVector shift_phase_vector(const PhaseVector& a, int l) {
  const int d = a.size();
  PhaseVector out(d);
  for (int k = 0; k < d; ++k) out[k] = a[mod_reduce(k - l, d)];
  return out;
}

PhaseVector scale_phase_vector(const PhaseVector& a, int c) {
  const int d = a.size();
  if (!is_unit(c, d))
    throw NotAUnitError("scale_phase_vector: c must be a unit mod d");
  PhaseVector out(d);
  for (int k = 0; k < d; ++k)
    out[k] = a[mod_reduce(static_cast<long long>(c) * k, d)];
  return out;
}

PhaseVector mub_index_phase_vector(const PhaseVector& a, int k) {
  const int d = a.size();
  const int kinv = unit_inverse(k, d);
  PhaseVector out(d);
  for (int l = 0; l < d; ++l)
    out[l] = a[mod_reduce(static_cast<long long>(kinv) * l, d)];
  return out;
}

}  // namespace qdc

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

#ifndef QDC_COMPARE_HPP
#define QDC_COMPARE_HPP

#include "qdc/types.hpp"

namespace qdc {

// Result of a comparison modulo global phase. For vectors `fidelity` is
// |<u,v>|/(|u||v|); for matrices `residual` is ||U - e^{i theta*} V||_F at
// the optimal phase theta* = arg tr(V^dag U).
struct PhaseComparison {
  bool equal;
  double fidelity;
  double residual;
};

// Vectors: equal iff fidelity >= 1 - tol.
PhaseComparison equal_up_to_phase(const CVector& u, const CVector& v,
                                  double tol = kDefaultTol);

// Matrices: equal iff the optimal-phase Frobenius residual is <= tol.
PhaseComparison equal_up_to_phase(const CMatrix& u, const CMatrix& v,
                                  double tol = kDefaultTol);

// |<u,v>|/(|u||v|); throws on shape mismatch or zero norm.
double state_fidelity(const CVector& u, const CVector& v);

}  // namespace qdc

#endif  // QDC_COMPARE_HPP

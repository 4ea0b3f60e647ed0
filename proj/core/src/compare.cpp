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

#include "qdc/compare.hpp"

#include <cmath>

namespace qdc {

double state_fidelity(const CVector& u, const CVector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("state_fidelity: shape mismatch");
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0)
    throw std::invalid_argument("state_fidelity: zero-norm vector");
  return std::abs(u.dot(v)) / (nu * nv);
}

PhaseComparison equal_up_to_phase(const CVector& u, const CVector& v, double tol) {
  const double fid = state_fidelity(u, v);
  // Residual at the aligning phase, for reporting.
  const Cx inner = u.dot(v);
  const Cx phase = std::abs(inner) > 0 ? inner / std::abs(inner) : Cx(1.0, 0.0);
  const double res = (u / u.norm() - phase * v / v.norm()).norm();
  return {fid >= 1.0 - tol, fid, res};
}

PhaseComparison equal_up_to_phase(const CMatrix& u, const CMatrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("equal_up_to_phase: shape mismatch");
  const Cx t = (v.adjoint() * u).trace();
  const Cx phase = std::abs(t) > 0 ? t / std::abs(t) : Cx(1.0, 0.0);
  const double res = (u - phase * v).norm();
  const double denom = u.norm() * v.norm();
  const double fid = denom > 0 ? std::abs(t) / denom : 0.0;
  return {res <= tol, fid, res};
}

}  // namespace qdc

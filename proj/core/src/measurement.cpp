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

#include "qdc/measurement.hpp"

#include <cmath>

namespace qdc {

namespace {

Eigen::Index pow_ll(int d, int n) {
  Eigen::Index out = 1;
  for (int i = 0; i < n; ++i) out *= d;
  return out;
}

}  // namespace

std::vector<MeasurementBranch> measure_in_basis(const StateVector& s, int q,
                                                const CMatrix& u) {
  const int d = s.dim();
  const int n = s.num_qudits();
  if (q < 0 || q >= n) throw std::invalid_argument("measure_in_basis: qudit out of range");
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("measure_in_basis: basis is not d x d");
  require_unitary(u, kBasisUnitaryTol, "measurement basis");

  // Projecting onto column k of u is the same as rotating by u^dag and
  // reading the computational digit.
  StateVector rotated = s;
  rotated.apply_single(u.adjoint(), q);

  const Eigen::Index inner = pow_ll(d, n - 1 - q);
  const Eigen::Index outer = pow_ll(d, q);
  const Eigen::Index block = inner * d;
  const CVector& amps = rotated.amplitudes();

  std::vector<MeasurementBranch> branches;
  for (int k = 0; k < d; ++k) {
    CVector slice(outer * inner);
    for (Eigen::Index o = 0; o < outer; ++o)
      slice.segment(o * inner, inner) = amps.segment(o * block + k * inner, inner);
    const double p = slice.squaredNorm();
    if (p < kBranchPruneTol) continue;
    slice /= std::sqrt(p);
    branches.push_back(MeasurementBranch{
        MeasurementRecord{q, u, k, p}, StateVector(d, n - 1, std::move(slice))});
  }
  return branches;
}

std::vector<MeasurementBranch> measure_computational(const StateVector& s, int q) {
  return measure_in_basis(s, q, CMatrix::Identity(s.dim(), s.dim()));
}

MeasurementBranch measure_sampled(const StateVector& s, int q, const CMatrix& u,
                                  Rng& rng) {
  auto branches = measure_in_basis(s, q, u);
  const double roll = rng.uniform();
  double acc = 0.0;
  for (auto& b : branches) {
    acc += b.record.probability;
    if (roll < acc) return b;
  }
  return branches.back();
}

MeasurementBranch measure_sampled(const StateVector& s, int q, const CMatrix& u,
                                  std::uint64_t seed) {
  Rng rng(seed);
  return measure_sampled(s, q, u, rng);
}

}  // namespace qdc

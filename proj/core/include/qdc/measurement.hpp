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

#ifndef QDC_MEASUREMENT_HPP
#define QDC_MEASUREMENT_HPP

#include <vector>

#include "qdc/random.hpp"
#include "qdc/state.hpp"
#include "qdc/types.hpp"

namespace qdc {

// One projective measurement. "Measuring in the basis defined by U" means
// projecting onto the columns of U.
struct MeasurementRecord {
  int qudit;
  CMatrix basis;
  int outcome;
  double probability;
};

struct MeasurementBranch {
  MeasurementRecord record;
  StateVector state;  // renormalized, with the measured qudit removed
};

// All branches of measuring qudit q in the basis defined by the unitary u.
// The measured qudit is removed from the register (indices above q shift
// down by one). Branches with probability below kBranchPruneTol are
// dropped; the rest appear in outcome order.
std::vector<MeasurementBranch> measure_in_basis(const StateVector& s, int q,
                                                const CMatrix& u);

// Computational-basis measurement (u = identity).
std::vector<MeasurementBranch> measure_computational(const StateVector& s, int q);

// Samples a single branch by the Born probabilities.
MeasurementBranch measure_sampled(const StateVector& s, int q, const CMatrix& u,
                                  Rng& rng);
MeasurementBranch measure_sampled(const StateVector& s, int q, const CMatrix& u,
                                  std::uint64_t seed);

}  // namespace qdc

#endif  // QDC_MEASUREMENT_HPP

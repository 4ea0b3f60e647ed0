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

#ifndef QDC_DEUTSCH_JOZSA_HPP
#define QDC_DEUTSCH_JOZSA_HPP

#include <utility>
#include <vector>

#include "qdc/teleport.hpp"
#include "qdc/types.hpp"

namespace qdc {

// f(x, y) = (x - a)(y - b) over Z_d; the task is to recover (a, b) with a
// single oracle evaluation.
struct HiddenShiftInstance {
  int d;
  int a;
  int b;
};

// The phase-kickback oracle on three qudits:
//   U_f |x>|y>|t> = |x>|y>|t + f(x,y)>,
// so on the |+_{d-1}> ancilla sector it multiplies by omega^{f(x,y)}.
CMatrix oracle_uf(const HiddenShiftInstance& inst);

// Reference circuit: |+>|+>|+_{d-1}>, U_f, controlled-Z^{-1} between the
// first two qudits, F^dag on both, computational measurement. The final
// two qudits land deterministically on basis states from which (a, b) is
// read off.
std::pair<int, int> run_circuit_reference(const HiddenShiftInstance& inst);

// The 2x2-grid-plus-outputs cluster (6 qudits) used by the cluster-state
// version: two rows 0-1-2 and 3-4-5 with vertical edges (0,3) and (1,4).
ClusterGraph dj_cluster_graph(int d);

// The measurement pattern standing in for the oracle: qudits 0 and 3 are
// measured in the (F Z(z^{-a}))^dag / (F Z(z^{-b}))^dag bases, then 1 and
// 4 in the F^dag basis; the F^dag gates ride on adaptive computation
// F = S_{-1} F^dag.
MeasurementPattern dj_pattern(const HiddenShiftInstance& inst);

struct DjBranch {
  // Outcomes in measurement order: vertices 0, 3, 1, 4.
  std::vector<int> outcomes;
  std::pair<int, int> recovered;  // (a, b) after classical correction
  double probability;
};

// Every measurement branch of the cluster run; each one must recover
// (a, b) exactly after the classical correction.
std::vector<DjBranch> run_cluster_version(const HiddenShiftInstance& inst);

// One seeded trajectory.
DjBranch run_cluster_version_sampled(const HiddenShiftInstance& inst,
                                     std::uint64_t seed);

}  // namespace qdc

#endif  // QDC_DEUTSCH_JOZSA_HPP

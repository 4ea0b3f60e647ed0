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

#ifndef QDC_TELEPORT_HPP
#define QDC_TELEPORT_HPP

#include <variant>
#include <vector>

#include "qdc/cluster.hpp"
#include "qdc/compare.hpp"
#include "qdc/frame.hpp"
#include "qdc/measurement.hpp"
#include "qdc/types.hpp"

namespace qdc {

// One one-dit teleportation: measure `vertex` in the basis defined by
// (F Z(a_adapted))^dag, where the adaptation is computed from the live
// frame at execution time. fc != 1 requests adaptive computation
// F = S_fc F_fc, so the step contributes F_fc Z(a) = S_{fc^{-1}} F Z(a)
// to the intended gate.
struct MeasureStep {
  int vertex;
  PhaseVector base;
  int fc = 1;
};

// Accounts for the CZ edge (v1, v2) between two logical wires at this
// point of the pattern.
struct InteractStep {
  int v1;
  int v2;
};

using PatternStep = std::variant<MeasureStep, InteractStep>;

struct MeasurementPattern {
  std::vector<PatternStep> steps;
  void add_measure(int vertex, PhaseVector base, int fc = 1) {
    steps.push_back(MeasureStep{vertex, std::move(base), fc});
  }
  void add_interact(int v1, int v2) { steps.push_back(InteractStep{v1, v2}); }
};

// One branch of a pattern run. `state` holds the unmeasured output
// qudits in wire order; `intended` is the gate the pattern implements on
// the logical register, identical across branches.
struct PatternResult {
  StateVector state;
  ErrorFrame frame;
  std::vector<MeasurementRecord> transcript;  // record.qudit is the vertex id
  CMatrix intended;
  double probability;
};

// Decomposition of the cluster into left-to-right logical wires. Edges
// named by interact steps connect distinct wires; all remaining edges
// must chain each wire together, or the cluster cannot be evaluated by
// one-dit teleportations (TopologyError).
struct WirePlan {
  std::vector<std::vector<int>> rows;  // vertices of each wire, left to right
  std::vector<std::pair<int, int>> cross_edges;
};

WirePlan plan_wires(const ClusterGraph& g, const MeasurementPattern& p);

// Runs the pattern on the cluster built from g, with `input` occupying
// the left end of each wire (qudit w of input -> start of wire w). The
// exhaustive form returns every measurement branch, ordered by outcome
// tuple; the sampled form follows one seeded trajectory.
std::vector<PatternResult> run_pattern(const StateVector& input, const ClusterGraph& g,
                                       const MeasurementPattern& p);
PatternResult run_pattern_sampled(const StateVector& input, const ClusterGraph& g,
                                  const MeasurementPattern& p, std::uint64_t seed);

// Same with the default all-|+> input.
std::vector<PatternResult> run_pattern(const ClusterGraph& g,
                                       const MeasurementPattern& p);

// realize(frame)^dag . state compared with intended . input, up to phase.
PhaseComparison check_frame_soundness(const PatternResult& r, const StateVector& input,
                                      double tol = kDefaultTol);

// The Figure-level teleportation primitive: CZ entangles psi with |+>,
// the first qudit is measured in the (F Z(a))^dag basis, and outcome m is
// post-selected. The result equals X^m F Z(a) |psi> up to phase, each
// outcome occurring with probability 1/d.
std::vector<MeasurementBranch> one_dit_teleport_branches(const StateVector& psi,
                                                         const PhaseVector& a);
StateVector one_dit_teleport(const StateVector& psi, const PhaseVector& a,
                             int outcome);

}  // namespace qdc

#endif  // QDC_TELEPORT_HPP

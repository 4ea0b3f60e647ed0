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

#ifndef QDC_CLUSTER_HPP
#define QDC_CLUSTER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qdc/measurement.hpp"
#include "qdc/state.hpp"
#include "qdc/types.hpp"

namespace qdc {

// An undirected simple graph describing which qudit pairs receive a CZ
// interaction. Vertices may optionally carry a single-qudit input state
// overriding the default |+>.
class ClusterGraph {
 public:
  ClusterGraph(int d, int n);

  int dim() const { return d_; }
  int num_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Adds an undirected edge. Self-loops and duplicates are errors rather
  // than no-ops, so that specification bugs in graph files surface.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;

  void set_input_state(int v, const CVector& state);
  const std::optional<CVector>& input_state(int v) const;

  // Deletes vertex v and its incident edges; vertices above v shift down.
  ClusterGraph without_vertex(int v) const;

 private:
  void check_vertex(int v) const;
  int d_;
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::optional<CVector>> inputs_;
};

// (prod_{(a,b) in E} CZ_ab) applied to the vertex states (|+> unless
// overridden). All CZ factors commute, so edge order is irrelevant.
StateVector build_cluster_state(const ClusterGraph& g);

// Same, but a joint (possibly entangled) input state occupies the listed
// vertices: qudit i of `input` lands on input_vertices[i]. Remaining
// vertices start in |+>.
StateVector build_cluster_state(const ClusterGraph& g, const StateVector& input,
                                const std::vector<int>& input_vertices);

// The stabilizer S(a) = X^dag_a (x) prod_{b in N(a)} Z_b as an explicit
// matrix on the full register. Only sensible for small registers; the
// verification path below applies it in place instead.
CMatrix stabilizer_operator(const ClusterGraph& g, int a);

// S(a)|psi> without forming the matrix.
StateVector apply_stabilizer(const ClusterGraph& g, int a, const StateVector& psi);

// max_a ||S(a)|phi> - |phi>|| over all vertices (eigenvalue-1 defect).
double stabilizer_defect(const ClusterGraph& g);

// True iff S(a)|phi_C(G)> = |phi_C(G)> within tol for every vertex a.
bool verify_stabilizers(const ClusterGraph& g, double tol = kDefaultTol);

// Distance (up to global phase) between the post-measurement state and
// the predicted smaller cluster state with Z^j on the neighbors.
double z_removal_defect(const ClusterGraph& g, int q, int outcome);

// Maximal connectedness: measuring vertex q of the cluster state in the
// computational basis with outcome j must leave the remaining qudits in
// (prod_{b in N(q)} Z^j_b) |phi_C(G-q)> up to global phase.
bool z_measure_removal_check(const ClusterGraph& g, int q, int outcome,
                             double tol = kDefaultTol);

// Path graph 0-1-2-...-(n-1), the linear cluster.
ClusterGraph path_graph(int d, int n);

}  // namespace qdc

#endif  // QDC_CLUSTER_HPP

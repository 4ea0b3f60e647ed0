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

#include "qdc/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdc/compare.hpp"

namespace qdc {

ClusterGraph::ClusterGraph(int d, int n) : d_(d), n_(n), inputs_(n) {
  if (d < 2) throw std::invalid_argument("ClusterGraph: dimension must be >= 2");
  if (n < 1) throw std::invalid_argument("ClusterGraph: need at least one vertex");
}

void ClusterGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("ClusterGraph: vertex " + std::to_string(v) +
                                " out of range");
}

void ClusterGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("ClusterGraph: self-loop at " + std::to_string(u));
  if (has_edge(u, v))
    throw std::invalid_argument("ClusterGraph: duplicate edge " + std::to_string(u) +
                                "-" + std::to_string(v));
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool ClusterGraph::has_edge(int u, int v) const {
  const auto e = std::make_pair(std::min(u, v), std::max(u, v));
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<int> ClusterGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ClusterGraph::set_input_state(int v, const CVector& state) {
  check_vertex(v);
  if (state.size() != d_)
    throw std::invalid_argument("ClusterGraph: input state has wrong dimension");
  inputs_[v] = state;
}

const std::optional<CVector>& ClusterGraph::input_state(int v) const {
  check_vertex(v);
  return inputs_[v];
}

ClusterGraph ClusterGraph::without_vertex(int v) const {
  check_vertex(v);
  if (n_ == 1) throw std::invalid_argument("ClusterGraph: cannot delete the only vertex");
  ClusterGraph g(d_, n_ - 1);
  auto remap = [v](int w) { return w > v ? w - 1 : w; };
  for (const auto& [a, b] : edges_)
    if (a != v && b != v) g.add_edge(remap(a), remap(b));
  for (int w = 0; w < n_; ++w)
    if (w != v && inputs_[w]) g.set_input_state(remap(w), *inputs_[w]);
  return g;
}

StateVector build_cluster_state(const ClusterGraph& g) {
  const int d = g.dim();
  StateVector s = StateVector::single(d, g.input_state(0) ? *g.input_state(0)
                                                          : CVector(plus_state(d)));
  for (int v = 1; v < g.num_vertices(); ++v) {
    const auto& in = g.input_state(v);
    s = s.tensor(StateVector::single(d, in ? *in : CVector(plus_state(d))));
  }
  for (const auto& [a, b] : g.edges()) s.apply_cz(a, b);
  return s;
}

StateVector build_cluster_state(const ClusterGraph& g, const StateVector& input,
                                const std::vector<int>& input_vertices) {
  const int d = g.dim();
  const int n = g.num_vertices();
  if (input.dim() != d)
    throw std::invalid_argument("build_cluster_state: input dimension mismatch");
  if (input.num_qudits() != static_cast<int>(input_vertices.size()))
    throw std::invalid_argument("build_cluster_state: input vertex count mismatch");

  std::vector<int> pos_of_vertex(n, -1);
  for (std::size_t i = 0; i < input_vertices.size(); ++i) {
    const int v = input_vertices[i];
    if (v < 0 || v >= n)
      throw std::invalid_argument("build_cluster_state: input vertex out of range");
    if (pos_of_vertex[v] != -1)
      throw std::invalid_argument("build_cluster_state: repeated input vertex");
    pos_of_vertex[v] = static_cast<int>(i);
  }

  // amplitude(full digits) = input amplitude at the input vertices times
  // 1/sqrt(d) per remaining |+> vertex.
  Eigen::Index total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  const int n_plus = n - input.num_qudits();
  const double plus_amp = std::pow(static_cast<double>(d), -0.5 * n_plus);

  CVector amps(total);
  std::vector<int> digits(n);
  std::vector<int> in_digits(input.num_qudits());
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    Eigen::Index rest = idx;
    for (int q = n - 1; q >= 0; --q) {
      digits[q] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (int q = 0; q < n; ++q)
      if (pos_of_vertex[q] >= 0) in_digits[pos_of_vertex[q]] = digits[q];
    amps(idx) = plus_amp * input.amplitude(in_digits);
  }
  StateVector s(d, n, std::move(amps));
  for (const auto& [a, b] : g.edges()) s.apply_cz(a, b);
  return s;
}

CMatrix stabilizer_operator(const ClusterGraph& g, int a) {
  const int d = g.dim();
  const int n = g.num_vertices();
  const auto nbrs = g.neighbors(a);
  const CMatrix xd = pauli_x(d).adjoint();
  const CMatrix z = pauli_z(d);
  CMatrix out = CMatrix::Identity(1, 1);
  for (int v = 0; v < n; ++v) {
    if (v == a) {
      out = kron(out, xd);
    } else if (std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end()) {
      out = kron(out, z);
    } else {
      out = kron(out, CMatrix::Identity(d, d));
    }
  }
  return out;
}

StateVector apply_stabilizer(const ClusterGraph& g, int a, const StateVector& psi) {
  StateVector out = psi;
  out.apply_single(pauli_x(g.dim()).adjoint(), a);
  const CMatrix z = pauli_z(g.dim());
  for (int b : g.neighbors(a)) out.apply_single(z, b);
  return out;
}

double stabilizer_defect(const ClusterGraph& g) {
  const StateVector phi = build_cluster_state(g);
  double worst = 0.0;
  for (int a = 0; a < g.num_vertices(); ++a) {
    const StateVector sphi = apply_stabilizer(g, a, phi);
    // Eigenvalue 1, not merely equality up to phase.
    worst = std::max(worst, (sphi.amplitudes() - phi.amplitudes()).norm());
  }
  return worst;
}

bool verify_stabilizers(const ClusterGraph& g, double tol) {
  return stabilizer_defect(g) <= tol;
}

double z_removal_defect(const ClusterGraph& g, int q, int outcome) {
  const StateVector phi = build_cluster_state(g);
  const auto branches = measure_computational(phi, q);
  const StateVector* post = nullptr;
  for (const auto& b : branches)
    if (b.record.outcome == outcome) post = &b.state;
  if (post == nullptr) return 1.0;

  StateVector expected = build_cluster_state(g.without_vertex(q));
  const CMatrix zj = matrix_power(pauli_z(g.dim()), outcome);
  for (int b : g.neighbors(q))
    expected.apply_single(zj, b > q ? b - 1 : b);
  return equal_up_to_phase(post->amplitudes(), expected.amplitudes()).residual;
}

bool z_measure_removal_check(const ClusterGraph& g, int q, int outcome, double tol) {
  return z_removal_defect(g, q, outcome) <= tol;
}

ClusterGraph path_graph(int d, int n) {
  ClusterGraph g(d, n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace qdc

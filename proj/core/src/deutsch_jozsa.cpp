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

#include "qdc/deutsch_jozsa.hpp"

#include <cmath>
#include <string>

namespace qdc {

namespace {

void check_instance(const HiddenShiftInstance& inst) {
  if (inst.d < 2) throw std::invalid_argument("instance: dimension must be >= 2");
  if (inst.a < 0 || inst.a >= inst.d || inst.b < 0 || inst.b >= inst.d)
    throw std::invalid_argument("instance: hidden parameters must lie in [0, d)");
}

int f_value(const HiddenShiftInstance& inst, int x, int y) {
  return mod_reduce(static_cast<long long>(x - inst.a) * (y - inst.b), inst.d);
}

// The outputs of a finished run are deterministic basis states; read the
// digits off the dominant amplitude.
std::vector<int> read_basis_digits(const StateVector& s) {
  Eigen::Index best = 0;
  double best_mag = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double mag = std::norm(s.amplitudes()(i));
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag < 1.0 - 1e-9)
    throw std::runtime_error("expected a deterministic computational-basis output");
  std::vector<int> digits(s.num_qudits());
  for (int q = 0; q < s.num_qudits(); ++q) digits[q] = s.digit(best, q);
  return digits;
}

std::pair<int, int> correct_branch(const HiddenShiftInstance& inst,
                                   const std::vector<int>& m, int k1, int k2) {
  // Final outputs are |-b - m2 + m3> |-a - m4 + m1> in paper order
  // m = (m1, m3, m2, m4); undo the shifts and negate.
  const int d = inst.d;
  const int m1 = m[0], m3 = m[1], m2 = m[2], m4 = m[3];
  const int b = mod_reduce(-(k1 + m2 - m3), d);
  const int a = mod_reduce(-(k2 + m4 - m1), d);
  return {a, b};
}

DjBranch finish_branch(const HiddenShiftInstance& inst, const PatternResult& r) {
  std::vector<int> m;
  for (const auto& rec : r.transcript) m.push_back(rec.outcome);
  const std::vector<int> digits = read_basis_digits(r.state);
  DjBranch out;
  out.outcomes = std::move(m);
  out.recovered = correct_branch(inst, out.outcomes, digits[0], digits[1]);
  out.probability = r.probability;
  return out;
}

}  // namespace

CMatrix oracle_uf(const HiddenShiftInstance& inst) {
  check_instance(inst);
  const int d = inst.d;
  const CMatrix x = pauli_x(d);
  CMatrix u = CMatrix::Zero(d * d * d, d * d * d);
  for (int xv = 0; xv < d; ++xv)
    for (int yv = 0; yv < d; ++yv) {
      const CMatrix shift = matrix_power(x, -f_value(inst, xv, yv));
      u.block((xv * d + yv) * d, (xv * d + yv) * d, d, d) = shift;
    }
  return u;
}

std::pair<int, int> run_circuit_reference(const HiddenShiftInstance& inst) {
  check_instance(inst);
  const int d = inst.d;
  StateVector s = StateVector::single(d, plus_state(d))
                      .tensor(StateVector::single(d, plus_state(d)))
                      .tensor(StateVector::single(d, plus_state(d, d - 1)));
  s.amplitudes() = oracle_uf(inst) * s.amplitudes();
  s.apply_cz(0, 1, -1);
  const CMatrix fdag = fourier_gate(d).adjoint();
  s.apply_single(fdag, 0);
  s.apply_single(fdag, 1);
  // Both output measurements are deterministic; the ancilla is left alone.
  const auto first = measure_computational(s, 0);
  if (first.size() != 1)
    throw std::runtime_error("reference circuit output is not deterministic");
  const auto second = measure_computational(first[0].state, 0);
  if (second.size() != 1)
    throw std::runtime_error("reference circuit output is not deterministic");
  // First qudit carries -b, second -a.
  return {mod_reduce(-second[0].record.outcome, d),
          mod_reduce(-first[0].record.outcome, d)};
}

ClusterGraph dj_cluster_graph(int d) {
  ClusterGraph g(d, 6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  return g;
}

MeasurementPattern dj_pattern(const HiddenShiftInstance& inst) {
  check_instance(inst);
  const int d = inst.d;
  const int minus_one = mod_reduce(-1, d);
  MeasurementPattern p;
  p.add_interact(0, 3);
  p.add_measure(0, z_power_phase_vector(d, -inst.a));
  p.add_measure(3, z_power_phase_vector(d, -inst.b), minus_one);
  p.add_interact(1, 4);
  p.add_measure(1, zero_phase_vector(d), minus_one);
  p.add_measure(4, zero_phase_vector(d), minus_one);
  return p;
}

std::vector<DjBranch> run_cluster_version(const HiddenShiftInstance& inst) {
  check_instance(inst);
  const ClusterGraph g = dj_cluster_graph(inst.d);
  const MeasurementPattern p = dj_pattern(inst);
  std::vector<DjBranch> out;
  for (const PatternResult& r : run_pattern(g, p)) out.push_back(finish_branch(inst, r));
  return out;
}

DjBranch run_cluster_version_sampled(const HiddenShiftInstance& inst,
                                     std::uint64_t seed) {
  check_instance(inst);
  const ClusterGraph g = dj_cluster_graph(inst.d);
  const StateVector input = StateVector::all_plus(inst.d, 2);
  const PatternResult r = run_pattern_sampled(input, g, dj_pattern(inst), seed);
  return finish_branch(inst, r);
}

}  // namespace qdc

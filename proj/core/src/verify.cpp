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

#include "qdc/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qdc/cluster.hpp"
#include "qdc/clifford.hpp"
#include "qdc/compare.hpp"
#include "qdc/frame.hpp"
#include "qdc/gates.hpp"
#include "qdc/mub.hpp"
#include "qdc/random.hpp"

namespace qdc {

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

void push(std::vector<CheckResult>& out, std::string name, int d, double residual,
          double tol) {
  out.push_back(CheckResult{std::move(name), d, residual, residual <= tol});
}

void push_flag(std::vector<CheckResult>& out, std::string name, int d, bool pass,
               double residual) {
  out.push_back(CheckResult{std::move(name), d, residual, pass});
}

}  // namespace

std::vector<CheckResult> identities_suite(const SuiteConfig& cfg) {
  const int d = cfg.dim;
  const double tol = cfg.tolerance;
  Rng rng(cfg.seed + 0x1d5u);
  std::vector<CheckResult> out;

  const CMatrix f = fourier_gate(d);
  const CMatrix x = pauli_x(d);
  const CMatrix z = pauli_z(d);
  const CMatrix cz = controlled_z(d);
  const CMatrix id = CMatrix::Identity(d, d);

  {  // Z^j |+_k> = |+_{j+k}>, exactly.
    double worst = 0.0;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        worst = std::max(worst, (matrix_power(z, j) * plus_state(d, k) -
                                 plus_state(d, j + k))
                                    .norm());
    push(out, "identities/eq05-clock-shifts-fourier-basis", d, worst, tol);
  }
  {  // X^j |+_k> = omega^{jk} |+_k>.
    double worst = 0.0;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        worst = std::max(
            worst, (matrix_power(x, j) * plus_state(d, k) -
                    omega_pow(d, static_cast<long long>(j) * k) * plus_state(d, k))
                       .norm());
    push(out, "identities/eq06-shift-phases-fourier-basis", d, worst, tol);
  }
  {  // Z(a) X^l = X^l Z(a^(l)).
    double worst = 0.0;
    for (int l = 0; l < d; ++l) {
      const PhaseVector a = rng.phase_vector(d);
      worst = std::max(worst, max_abs(phase_gate(a) * matrix_power(x, l) -
                                      matrix_power(x, l) *
                                          phase_gate(shift_phase_vector(a, l))));
    }
    push(out, "identities/eq07-phase-past-shift", d, worst, tol);
  }
  {  // Z(a) Z = Z Z(a).
    const PhaseVector a = rng.phase_vector(d);
    push(out, "identities/eq08-phase-past-clock", d,
         max_abs(phase_gate(a) * z - z * phase_gate(a)), tol);
  }
  {  // FZ = XF and FX = Z^{-1} F.
    const double worst = std::max(max_abs(f * z - x * f),
                                  max_abs(f * x - matrix_power(z, -1) * f));
    push(out, "identities/eq09-fourier-conjugation", d, worst, tol);
  }
  {  // CZ commutes with Z on either qudit.
    const double worst =
        std::max(max_abs(cz * kron(z, id) - kron(z, id) * cz),
                 max_abs(cz * kron(id, z) - kron(id, z) * cz));
    push(out, "identities/eq13-cz-clock-commutes", d, worst, tol);
  }
  {  // CZ (X (x) I) = (X (x) Z^{-1}) CZ and mirrored.
    const CMatrix zinv = matrix_power(z, -1);
    const double worst =
        std::max(max_abs(cz * kron(x, id) - kron(x, zinv) * cz),
                 max_abs(cz * kron(id, x) - kron(zinv, x) * cz));
    push(out, "identities/eq14-cz-shift-kickback", d, worst, tol);
  }
  {  // Two-qudit Pauli frame through CZ, up to global phase.
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      const int x1 = rng.uniform_int(d), z1 = rng.uniform_int(d);
      const int x2 = rng.uniform_int(d), z2 = rng.uniform_int(d);
      auto pauli = [&](int xe, int ze) {
        return CMatrix(matrix_power(x, xe) * matrix_power(z, ze));
      };
      const CMatrix lhs = cz * kron(pauli(x1, z1), pauli(x2, z2));
      const CMatrix rhs =
          kron(pauli(x1, mod_reduce(z1 - x2, d)), pauli(x2, mod_reduce(z2 - x1, d))) *
          cz;
      worst = std::max(worst, equal_up_to_phase(lhs, rhs, tol).residual);
    }
    push(out, "identities/eq15-cz-pauli-frame", d, worst, tol);
  }
  {  // F S_c = S_{c^{-1}} F and Z(a) S_c = S_c Z(a'), a'_k = a_{ck}.
    double worst = 0.0;
    for (int c : units_of(d)) {
      const CMatrix sc = perm_gate_sc(c, d);
      worst = std::max(worst,
                       max_abs(f * sc - perm_gate_sc(unit_inverse(c, d), d) * f));
      const PhaseVector a = rng.phase_vector(d);
      worst = std::max(worst, max_abs(phase_gate(a) * sc -
                                      sc * phase_gate(scale_phase_vector(a, c))));
    }
    push(out, "identities/eq16-sc-past-fourier-and-phase", d, worst, tol);
  }
  {  // S_c X = X^c S_c and S_c Z = Z^{c^{-1}} S_c.
    double worst = 0.0;
    for (int c : units_of(d)) {
      const CMatrix sc = perm_gate_sc(c, d);
      worst = std::max(worst, max_abs(sc * x - matrix_power(x, c) * sc));
      worst = std::max(worst,
                       max_abs(sc * z - matrix_power(z, unit_inverse(c, d)) * sc));
    }
    push(out, "identities/eq17-sc-normalizes-paulis", d, worst, tol);
  }
  {  // CZ (S_c (x) I) = (S_c (x) I) C[Z^c] and mirrored.
    double worst = 0.0;
    for (int c : units_of(d)) {
      const CMatrix sc = perm_gate_sc(c, d);
      const CMatrix czc = controlled_z(d, c);
      worst = std::max(worst, max_abs(cz * kron(sc, id) - kron(sc, id) * czc));
      worst = std::max(worst, max_abs(cz * kron(id, sc) - kron(id, sc) * czc));
    }
    push(out, "identities/eq18-cz-past-sc", d, worst, tol);
  }
  {  // XZ = omega ZX.
    push(out, "identities/xz-commutation", d, max_abs(x * z - omega_pow(d, 1) * z * x),
         tol);
  }
  push(out, "identities/swap-identities", d, swap_identities_defect(d, cfg.seed + 3),
       tol);

  if (is_prime(d)) {
    // <X, S_c : c unit> acts on labels as the affine maps k -> ck - t.
    std::vector<Perm> gens{shift_perm(d)};
    for (int c : units_of(d)) gens.push_back(mult_perm(c, d));
    const auto order = permutation_group_order(gens);
    const double defect =
        std::abs(static_cast<double>(order) - static_cast<double>(d) * (d - 1));
    push_flag(out, "identities/perm-group-order", d, defect == 0.0, defect);
  }
  if (d == 3) {
    // X and S_{-1} generate all of S_3.
    const auto order =
        permutation_group_order({shift_perm(3), mult_perm(2, 3)});
    push_flag(out, "identities/perm-group-x-s-minus-one", d, order == 6,
              std::abs(static_cast<double>(order) - 6.0));
  }
  return out;
}

std::vector<CheckResult> mub_suite(const SuiteConfig& cfg) {
  const int d = cfg.dim;
  if (!is_prime(d))
    throw std::invalid_argument("mub suite: unsupported dimension " +
                                std::to_string(d) + " (prime required)");
  const double tol = cfg.tolerance;
  std::vector<CheckResult> out;
  const MubFamily family = build_mub_family(d);

  {
    double worst = 0.0;
    for (const CMatrix& basis : family.bases)
      worst = std::max(worst, unitarity_defect(basis));
    push(out, "mub/basis-orthonormality", d, worst, 1e-12);
  }
  push(out, "mub/overlap-flatness", d, mub_overlap_defect(family), tol);
  {
    const int rank = spanning_rank(family);
    const double defect = std::abs(rank - d * d);
    push_flag(out, "mub/spanning-rank", d, defect == 0.0, defect);
  }
  if (d == 2) {
    // Z(b)|+_0> = (|0>+i|1>)/sqrt(2) and Z(b)|+_1> = (|0>-i|1>)/sqrt(2).
    CVector plus_i(2), minus_i(2);
    plus_i << Cx(1, 0), Cx(0, 1);
    minus_i << Cx(1, 0), Cx(0, -1);
    plus_i /= std::sqrt(2.0);
    minus_i /= std::sqrt(2.0);
    const CMatrix zb = phase_gate(family.b_vectors[0]);
    const double worst = std::max((zb * plus_state(2, 0) - plus_i).norm(),
                                  (zb * plus_state(2, 1) - minus_i).norm());
    push(out, "mub/eigenphase-relation", d, worst, tol);
  } else {
    double worst = 0.0;
    for (int k = 1; k < d; ++k)
      worst = std::max(worst, eigenphase_relation_defect(d, k));
    push(out, "mub/eigenphase-relation", d, worst, tol);
  }
  if (d == 3) {
    // The explicit dimension-3 data: b_1 = (0, 0, 4pi/3), b_2 = (0, 2pi/3, 0)
    // and the nine eigenvector table entries.
    double worst = std::abs(family.b_vectors[0][0]) +
                   std::abs(family.b_vectors[0][1]) +
                   std::abs(family.b_vectors[0][2] - 4.0 * M_PI / 3.0);
    worst = std::max(worst, std::abs(family.b_vectors[1][0]) +
                                std::abs(family.b_vectors[1][1] - 2.0 * M_PI / 3.0) +
                                std::abs(family.b_vectors[1][2]));
    push(out, "mub/d3-b-vectors", d, worst, tol);

    const Cx w = omega_pow(3, 1);
    const Cx w2 = omega_pow(3, 2);
    const double s = 1.0 / std::sqrt(3.0);
    auto col = [s](Cx a0, Cx a1, Cx a2) {
      CVector v(3);
      v << a0, a1, a2;
      return CVector(s * v);
    };
    const CMatrix& zx = family.bases[2];
    const CMatrix& zx2 = family.bases[3];
    double table = 0.0;
    table = std::max(table, (zx.col(0) - col(1, 1, w2)).norm());
    table = std::max(table, (zx.col(1) - col(w2, 1, 1)).norm());
    table = std::max(table, (zx.col(2) - col(1, w2, 1)).norm());
    table = std::max(table, (zx2.col(0) - col(1, w, 1)).norm());
    table = std::max(table, (zx2.col(1) - col(1, 1, w)).norm());
    table = std::max(table, (zx2.col(2) - col(w, 1, 1)).norm());
    push(out, "mub/d3-eigenvector-table", d, table, tol);
  }
  return out;
}

std::vector<CheckResult> clifford_suite(const SuiteConfig& cfg) {
  const int d = cfg.dim;
  if (!is_prime(d))
    throw std::invalid_argument("clifford suite: unsupported dimension " +
                                std::to_string(d) + " (prime required)");
  const double tol = cfg.tolerance;
  std::vector<CheckResult> out;

  std::vector<CMatrix> generators{pauli_z(d), pauli_x(d), fourier_gate(d),
                                  phase_p_gate(d)};
  for (int c : units_of(d)) generators.push_back(perm_gate_sc(c, d));

  {  // Every generator maps every Pauli label back into the group.
    double worst = 0.0;
    bool ok = true;
    try {
      for (const CMatrix& u : generators)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c) {
            const auto r = conjugate_pauli(u, PauliLabel{0, b, c}, d, tol);
            const CMatrix diff = u * pauli_matrix(PauliLabel{0, b, c}, d) * u.adjoint() -
                                 r.phase * pauli_matrix(PauliLabel{0, r.label.x_exp,
                                                                   r.label.z_exp},
                                                        d);
            worst = std::max(worst, max_abs(diff));
          }
    } catch (const NotCliffordError&) {
      ok = false;
      worst = 1.0;
    }
    push_flag(out, "clifford/generators-are-clifford", d, ok && worst <= tol, worst);
  }
  {  // Conjugation preserves commutator exponents.
    int mismatches = 0;
    for (const CMatrix& u : generators) {
      const PauliLabel p{0, 1, 0};
      const PauliLabel q{0, 0, 1};
      const auto up = conjugate_pauli(u, p, d, tol).label;
      const auto uq = conjugate_pauli(u, q, d, tol).label;
      if (commutator_exponent(up, uq, d) != commutator_exponent(p, q, d)) ++mismatches;
    }
    push_flag(out, "clifford/commutator-preserved", d, mismatches == 0,
              static_cast<double>(mismatches));
  }
  {
    const auto actions = all_symplectic_actions(d);
    const double expected = static_cast<double>(d) * (d * d - 1);
    const double defect = std::abs(static_cast<double>(actions.size()) - expected);
    push_flag(out, "clifford/action-count", d, defect == 0.0, defect);
  }
  {
    const GenerationReport report = verify_generation(d, tol);
    push_flag(out, "clifford/generation", d, report.failures == 0,
              static_cast<double>(report.failures));
  }
  return out;
}

std::vector<CheckResult> stabilizer_suite(const SuiteConfig& cfg) {
  const int d = cfg.dim;
  const double tol = cfg.tolerance;
  Rng rng(cfg.seed + 0x57abu);
  std::vector<CheckResult> out;

  const int num_graphs = 17;
  for (int idx = 0; idx < num_graphs; ++idx) {
    const int n = 2 + rng.uniform_int(4);  // 2..5 vertices
    ClusterGraph g(d, n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < 0.5) g.add_edge(u, v);
    double worst = stabilizer_defect(g);
    for (int q = 0; q < n && n > 1; ++q)
      for (int j = 0; j < d; ++j)
        worst = std::max(worst, z_removal_defect(g, q, j));
    char name[64];
    std::snprintf(name, sizeof name, "stabilizer/random-graph-%02d", idx);
    push(out, name, d, worst, tol);
  }

  {  // Negative control: |0...0> is not stabilized on an edged graph.
    ClusterGraph g = path_graph(d, 3);
    const StateVector zeros = StateVector::computational(d, {0, 0, 0});
    double defect = 0.0;
    for (int a = 0; a < 3; ++a)
      defect = std::max(
          defect, (apply_stabilizer(g, a, zeros).amplitudes() - zeros.amplitudes())
                      .norm());
    push_flag(out, "stabilizer/non-cluster-detected", d, defect > 0.1, defect);
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "identities") return identities_suite(cfg);
  if (name == "mub") return mub_suite(cfg);
  if (name == "clifford") return clifford_suite(cfg);
  if (name == "stabilizer") return stabilizer_suite(cfg);
  if (name == "all") {
    std::vector<CheckResult> out = identities_suite(cfg);
    auto append = [&out](std::vector<CheckResult> more) {
      out.insert(out.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
    };
    if (is_prime(cfg.dim)) {
      append(mub_suite(cfg));
      append(clifford_suite(cfg));
    }
    append(stabilizer_suite(cfg));
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace qdc

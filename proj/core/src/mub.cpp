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

#include "qdc/mub.hpp"

#include <cmath>
#include <string>

#include "qdc/random.hpp"

namespace qdc {

namespace {

void require_odd_prime(int d, const char* who) {
  if (!is_prime(d) || d == 2)
    throw std::invalid_argument(std::string(who) + ": unsupported dimension " +
                                std::to_string(d) + " (odd prime required)");
}

void require_prime(int d, const char* who) {
  if (!is_prime(d))
    throw std::invalid_argument(std::string(who) + ": unsupported dimension " +
                                std::to_string(d) + " (prime required)");
}

}  // namespace

AlphaVector solve_alpha(int d, int k) {
  require_odd_prime(d, "solve_alpha");
  if (!is_unit(k, d)) throw NotAUnitError("solve_alpha: k must be a unit mod d");
  AlphaVector alpha{d, k, std::vector<int>(d, 0)};
  // Walk the index cycle 0, k, 2k, ... generated by k; alpha_{l+k} = alpha_l - l.
  int l = 0;
  for (int step = 0; step < d - 1; ++step) {
    const int next = mod_reduce(l + k, d);
    alpha.exps[next] = mod_reduce(alpha.exps[l] - l, d);
    l = next;
  }
  return alpha;
}

PhaseVector alpha_phase_vector(const AlphaVector& alpha) {
  PhaseVector b(alpha.d);
  for (int l = 0; l < alpha.d; ++l)
    b[l] = 2.0 * M_PI * alpha.exps[l] / alpha.d;
  return b;
}

namespace {

// Columns |psi^k_j> = X^{-j} |psi^k_0> for odd prime d.
CMatrix zxk_eigenbasis(int d, int k) {
  const AlphaVector alpha = solve_alpha(d, k);
  CVector psi0(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int l = 0; l < d; ++l) psi0(l) = scale * omega_pow(d, alpha.exps[l]);
  CMatrix basis(d, d);
  for (int j = 0; j < d; ++j)
    for (int m = 0; m < d; ++m) basis(m, j) = psi0(mod_reduce(m - j, d));
  return basis;
}

PhaseVector d2_b_vector() {
  PhaseVector b(2);
  b[1] = M_PI;
  return b;
}

}  // namespace

MubFamily build_mub_family(int d) {
  require_prime(d, "build_mub_family");
  MubFamily family;
  family.d = d;
  family.bases.push_back(CMatrix::Identity(d, d));
  family.labels.push_back("Z");
  family.bases.push_back(fourier_gate(d));
  family.labels.push_back("X");
  if (d == 2) {
    const PhaseVector b = d2_b_vector();
    family.b_vectors.push_back(b);
    family.bases.push_back(phase_gate(b) * fourier_gate(2));
    family.labels.push_back("ZX");
    return family;
  }
  for (int k = 1; k < d; ++k) {
    family.b_vectors.push_back(alpha_phase_vector(solve_alpha(d, k)));
    family.bases.push_back(zxk_eigenbasis(d, k));
    family.labels.push_back(k == 1 ? "ZX" : "ZX^" + std::to_string(k));
  }
  return family;
}

double mub_overlap_defect(const MubFamily& family) {
  const double target = 1.0 / std::sqrt(static_cast<double>(family.d));
  double worst = 0.0;
  for (std::size_t p = 0; p < family.bases.size(); ++p)
    for (std::size_t q = p + 1; q < family.bases.size(); ++q) {
      const CMatrix overlaps = family.bases[p].adjoint() * family.bases[q];
      worst = std::max(worst, (overlaps.cwiseAbs().array() - target).abs().maxCoeff());
    }
  return worst;
}

double eigenphase_relation_defect(int d, int k) {
  require_odd_prime(d, "eigenphase_relation_check");
  const PhaseVector b = alpha_phase_vector(solve_alpha(d, k));
  const CMatrix zb = phase_gate(b);
  const CMatrix basis = zxk_eigenbasis(d, k);
  const CMatrix zxk = pauli_z(d) * matrix_power(pauli_x(d), k);
  const int h = half_inverse(d);

  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    // Z(b_k) |+_j> = omega^{(1/2) j(j+1) k} |psi^k_{jk}>, exactly.
    const CVector lhs = zb * plus_state(d, j);
    const Cx phase = omega_pow(d, static_cast<long long>(h) * j * (j + 1) * k);
    const CVector rhs = phase * basis.col(mod_reduce(static_cast<long long>(j) * k, d));
    worst = std::max(worst, (lhs - rhs).norm());
    // ZX^k |psi^k_j> = omega^j |psi^k_j>.
    const CVector eig = zxk * basis.col(j) - omega_pow(d, j) * basis.col(j);
    worst = std::max(worst, eig.norm());
  }
  return worst;
}

bool eigenphase_relation_check(int d, int k, double tol) {
  return eigenphase_relation_defect(d, k) <= tol;
}

int spanning_rank(const MubFamily& family) {
  const int d = family.d;
  // Each projector |v><v| is Hermitian; flatten real and imaginary parts
  // and count the singular values of the stacked family.
  const int num_vectors = d * static_cast<int>(family.bases.size());
  Eigen::MatrixXd stacked(num_vectors, 2 * d * d);
  int row = 0;
  for (const CMatrix& basis : family.bases) {
    for (int j = 0; j < d; ++j) {
      const CVector v = basis.col(j);
      const CMatrix proj = v * v.adjoint();
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          stacked(row, r * d + c) = proj(r, c).real();
          stacked(row, d * d + r * d + c) = proj(r, c).imag();
        }
      ++row;
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-8) ++rank;
  return rank;
}

std::string gate_class_name(GateClass cls) {
  switch (cls) {
    case GateClass::ZPhase: return "Z";
    case GateClass::XPhase: return "X";
    case GateClass::ZXkPhase: return "ZX^k";
    case GateClass::FourierStep: return "FZ";
  }
  return "?";
}

CMatrix x_phase_gate(const PhaseVector& a) {
  const CMatrix f = fourier_gate(a.size());
  return f * phase_gate(a) * f.adjoint();
}

CMatrix zxk_phase_gate(const PhaseVector& a, int k) {
  const int d = a.size();
  require_prime(d, "zxk_phase_gate");
  const int kk = mod_reduce(k, d);
  if (kk == 0) throw NotAUnitError("zxk_phase_gate: k must be a unit mod d");
  const MubFamily family = build_mub_family(d);
  const CMatrix& eigenbasis = family.bases[1 + kk];
  CMatrix out = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j)
    out += std::polar(1.0, a[j]) *
           (eigenbasis.col(j) * eigenbasis.col(j).adjoint());
  return out;
}

CompiledGate compile_gate(GateClass cls, const PhaseVector& a, int d, int k) {
  require_prime(d, "compile_gate");
  if (a.size() != d)
    throw std::invalid_argument("compile_gate: phase vector length != d");
  const int minus_one = mod_reduce(-1, d);

  CompiledGate gate{cls, k, a, {}, CMatrix()};
  switch (cls) {
    case GateClass::FourierStep:
      gate.pattern.add_measure(0, a);
      gate.expected = fourier_gate(d) * phase_gate(a);
      break;
    case GateClass::ZPhase:
      // Z(a) = F^dag . F Z(a)
      gate.pattern.add_measure(0, a);
      gate.pattern.add_measure(1, zero_phase_vector(d), minus_one);
      gate.expected = phase_gate(a);
      break;
    case GateClass::XPhase:
      // X(a) = F Z(a) . F^dag
      gate.pattern.add_measure(0, zero_phase_vector(d), minus_one);
      gate.pattern.add_measure(1, a);
      gate.expected = x_phase_gate(a);
      break;
    case GateClass::ZXkPhase: {
      if (!is_unit(k, d)) throw NotAUnitError("compile_gate: k must be a unit mod d");
      const PhaseVector b =
          d == 2 ? d2_b_vector() : alpha_phase_vector(solve_alpha(d, k));
      // ZX^k(a) = F^dag . F Z(b_k) . F Z(a') . F^dag Z(-b_k), where the
      // rotated vector a'_l = a_{k*l} attaches phase a_j to the
      // eigenvector of eigenvalue omega^j once the b_k conjugation
      // relabels the Fourier basis by j -> jk.
      const PhaseVector rotated =
          k == 1 ? a : mub_index_phase_vector(a, unit_inverse(k, d));
      gate.pattern.add_measure(0, negate_phase_vector(b), minus_one);
      gate.pattern.add_measure(1, rotated);
      gate.pattern.add_measure(2, b);
      gate.pattern.add_measure(3, zero_phase_vector(d), minus_one);
      gate.expected = zxk_phase_gate(a, k);
      break;
    }
  }
  return gate;
}

ClusterGraph pattern_cluster(const CompiledGate& gate, int d) {
  return path_graph(d, static_cast<int>(gate.pattern.steps.size()) + 1);
}

namespace {

struct Schedule {
  // basis[j] is I (Z factor) or F (X factor) for factor j, application order.
  std::vector<bool> is_fourier;
};

double coordinate_ascent(const CMatrix& u, const CMatrix& fourier,
                         const Schedule& schedule, std::vector<PhaseVector>& a,
                         int budget) {
  const int d = static_cast<int>(u.rows());
  const int num = static_cast<int>(schedule.is_fourier.size());
  auto factor = [&](int j) -> CMatrix {
    const CMatrix za = phase_gate(a[j]);
    return schedule.is_fourier[j] ? CMatrix(fourier * za * fourier.adjoint()) : za;
  };

  double best = 0.0;
  int used = 0;
  while (used < budget) {
    const double before = best;
    for (int j = 0; j < num && used < budget; ++j, ++used) {
      // G = Lft . A_j . Rgt with A_j = B Z(a__j) B^dag; the optimal a_j
      // aligns the diagonal of M = B^dag Rgt U^dag Lft B to the real axis.
      CMatrix lft = CMatrix::Identity(d, d);
      for (int i = num - 1; i > j; --i) lft = lft * factor(i);
      CMatrix rgt = CMatrix::Identity(d, d);
      for (int i = j - 1; i >= 0; --i) rgt = rgt * factor(i);
      const CMatrix& b = fourier;
      CMatrix m = rgt * u.adjoint() * lft;
      if (schedule.is_fourier[j]) m = b.adjoint() * m * b;
      double total = 0.0;
      for (int kk = 0; kk < d; ++kk) {
        const Cx mkk = m(kk, kk);
        a[j][kk] = std::abs(mkk) > 0 ? -std::arg(mkk) : 0.0;
        total += std::abs(mkk);
      }
      best = total / d;
    }
    if (best - before < 1e-15) break;
  }
  return best;
}

bool nearly_diagonal_unitary(const CMatrix& m, PhaseVector& a) {
  const int d = static_cast<int>(m.rows());
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      if (r == c && std::abs(std::abs(m(r, c)) - 1.0) > 1e-9) return false;
      if (r != c && std::abs(m(r, c)) > 1e-9) return false;
    }
  for (int k = 0; k < d; ++k) a[k] = std::arg(m(k, k));
  return true;
}

}  // namespace

UnitaryDecomposition decompose_unitary(const CMatrix& u, int d,
                                       const DecompositionOptions& opts) {
  require_prime(d, "decompose_unitary");
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("decompose_unitary: matrix is not d x d");
  require_unitary(u, 1e-8, "decompose_unitary input");
  const CMatrix f = fourier_gate(d);

  UnitaryDecomposition out{{}, 0.0, false};
  auto product_fidelity = [&](const std::vector<CompiledGate>& factors) {
    CMatrix g = CMatrix::Identity(d, d);
    for (const auto& fac : factors) g = fac.expected * g;
    return std::abs((g.adjoint() * u).trace()) / d;
  };

  // Single-factor shortcuts: diagonal in the computational, Fourier, or
  // teleportation frame.
  PhaseVector a(d);
  if (nearly_diagonal_unitary(u, a)) {
    out.factors.push_back(compile_gate(GateClass::ZPhase, a, d));
  } else if (nearly_diagonal_unitary(f.adjoint() * u, a)) {
    out.factors.push_back(compile_gate(GateClass::FourierStep, a, d));
  } else if (nearly_diagonal_unitary(f.adjoint() * u * f, a)) {
    out.factors.push_back(compile_gate(GateClass::XPhase, a, d));
  }
  if (!out.factors.empty()) {
    out.fidelity = product_fidelity(out.factors);
    out.converged = out.fidelity >= opts.target_fidelity;
    if (out.converged) return out;
    out.factors.clear();
  }

  Rng rng(opts.seed);
  double best_fid = 0.0;
  Schedule best_schedule;
  std::vector<PhaseVector> best_angles;

  for (int len = 3; len <= opts.max_factors; len += 2) {
    Schedule schedule;
    for (int j = 0; j < len; ++j) schedule.is_fourier.push_back(j % 2 == 1);
    for (int restart = 0; restart < opts.restarts; ++restart) {
      std::vector<PhaseVector> angles;
      for (int j = 0; j < len; ++j) angles.push_back(rng.phase_vector(d));
      const double fid = coordinate_ascent(u, f, schedule, angles, opts.iterations);
      if (fid > best_fid) {
        best_fid = fid;
        best_schedule = schedule;
        best_angles = angles;
      }
      if (best_fid >= opts.target_fidelity) break;
    }
    if (best_fid >= opts.target_fidelity) break;
  }

  for (std::size_t j = 0; j < best_angles.size(); ++j) {
    // Drop factors that degenerated to a global phase.
    const CMatrix za = phase_gate(best_angles[j]);
    const Cx lead = za(0, 0);
    if ((za - lead * CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9) continue;
    out.factors.push_back(compile_gate(
        best_schedule.is_fourier[j] ? GateClass::XPhase : GateClass::ZPhase,
        best_angles[j], d));
  }
  if (out.factors.empty())
    out.factors.push_back(compile_gate(GateClass::ZPhase, PhaseVector(d), d));
  out.fidelity = product_fidelity(out.factors);
  out.converged = out.fidelity >= opts.target_fidelity;
  return out;
}

}  // namespace qdc

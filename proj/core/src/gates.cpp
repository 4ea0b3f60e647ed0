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

#include "qdc/gates.hpp"

#include <cmath>
#include <string>

namespace qdc {

namespace {

void require_dimension(int d, const char* who) {
  if (d < 2)
    throw std::invalid_argument(std::string(who) + ": dimension must be >= 2, got " +
                                std::to_string(d));
}

}  // namespace

Cx omega_pow(int d, long long m) {
  const int r = mod_reduce(m, d);
  return std::polar(1.0, 2.0 * M_PI * r / d);
}

CMatrix fourier_gate(int d) {
  require_dimension(d, "fourier_gate");
  CMatrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      f(j, k) = scale * omega_pow(d, static_cast<long long>(j) * k);
  return f;
}

CMatrix pauli_x(int d) {
  require_dimension(d, "pauli_x");
  CMatrix x = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) x(mod_reduce(k - 1, d), k) = 1.0;
  return x;
}

CMatrix pauli_z(int d) {
  require_dimension(d, "pauli_z");
  CMatrix z = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = omega_pow(d, k);
  return z;
}

std::pair<CMatrix, CMatrix> pauli_gates(int d) {
  return {pauli_x(d), pauli_z(d)};
}

CMatrix phase_gate(const PhaseVector& a) {
  const int d = a.size();
  require_dimension(d, "phase_gate");
  CMatrix z = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = std::polar(1.0, a[k]);
  return z;
}

CMatrix perm_gate_sc(int c, int d) {
  require_dimension(d, "perm_gate_sc");
  if (!is_unit(c, d))
    throw NotAUnitError("perm_gate_sc: " + std::to_string(c) + " is not a unit mod " +
                        std::to_string(d));
  CMatrix s = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    s(mod_reduce(static_cast<long long>(c) * k, d), k) = 1.0;
  return s;
}

CMatrix perm_gate_sc(const ModUnit& c) { return perm_gate_sc(c.value, c.modulus); }

CMatrix controlled_z(int d, int power) {
  require_dimension(d, "controlled_z");
  CMatrix cz = CMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      cz(k * d + l, k * d + l) = omega_pow(d, static_cast<long long>(power) * k * l);
  return cz;
}

CMatrix phase_p_gate(int d) {
  require_dimension(d, "phase_p_gate");
  CMatrix p = CMatrix::Zero(d, d);
  if (d == 2) {
    p(0, 0) = 1.0;
    p(1, 1) = Cx(0.0, 1.0);
    return p;
  }
  if (d % 2 == 1) {
    const int h = half_inverse(d);
    for (int j = 0; j < d; ++j)
      p(j, j) = omega_pow(d, static_cast<long long>(h) * j * (j + 1));
    return p;
  }
  // Even d > 2: j(j+1) is even, so the exponent is an ordinary integer.
  for (int j = 0; j < d; ++j)
    p(j, j) = omega_pow(d, static_cast<long long>(j) * (j + 1) / 2);
  return p;
}

CMatrix clifford_q_gate(int d) {
  const CMatrix f = fourier_gate(d);
  return f * phase_p_gate(d) * f.adjoint();
}

CMatrix swap_gate(int d) {
  require_dimension(d, "swap_gate");
  CMatrix v = CMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      v(l * d + k, k * d + l) = 1.0;
  return v;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix embed_single(const CMatrix& u, int q, int n, int d) {
  if (q < 0 || q >= n) throw std::invalid_argument("embed_single: qudit out of range");
  CMatrix out = CMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i)
    out = kron(out, i == q ? u : CMatrix::Identity(d, d));
  return out;
}

CVector plus_state(int d, int j) {
  return fourier_gate(d).col(mod_reduce(j, d));
}

double unitarity_defect(const CMatrix& u) {
  const CMatrix r = u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols());
  return r.cwiseAbs().maxCoeff();
}

void require_unitary(const CMatrix& u, double tol, const char* what) {
  if (u.rows() != u.cols())
    throw std::invalid_argument(std::string(what) + ": not square");
  if (unitarity_defect(u) > tol)
    throw std::invalid_argument(std::string(what) + ": not unitary within tolerance");
}

CMatrix matrix_power(const CMatrix& u, int k) {
  CMatrix base = k >= 0 ? u : CMatrix(u.adjoint());
  int e = k >= 0 ? k : -k;
  CMatrix out = CMatrix::Identity(u.rows(), u.cols());
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

}  // namespace qdc

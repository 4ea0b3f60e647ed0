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

#include "qdc/clifford.hpp"

#include <cmath>

#include "qdc/modmath.hpp"

namespace qdc {

CMatrix pauli_matrix(const PauliLabel& p, int d) {
  // X^x Z^z |k> = omega^{z k} |k - x>.
  CMatrix m = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    m(mod_reduce(k - p.x_exp, d), k) = omega_pow(d, static_cast<long long>(p.z_exp) * k);
  return omega_pow(d, p.phase_exp) * m;
}

int commutator_exponent(const PauliLabel& p, const PauliLabel& q, int d) {
  return mod_reduce(static_cast<long long>(p.x_exp) * q.z_exp -
                        static_cast<long long>(q.x_exp) * p.z_exp,
                    d);
}

ConjugationResult conjugate_pauli(const CMatrix& u, const PauliLabel& p, int d,
                                  double tol) {
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("conjugate_pauli: matrix is not d x d");
  const CMatrix image = u * pauli_matrix(p, d) * u.adjoint();

  // tr(Q^dag M) = d * phase exactly when M = phase * Q; the Paulis are
  // trace-orthogonal so at most one candidate can respond.
  for (int b = 0; b < d; ++b) {
    for (int c = 0; c < d; ++c) {
      Cx s = 0.0;
      for (int k = 0; k < d; ++k)
        s += std::conj(omega_pow(d, static_cast<long long>(c) * k)) *
             image(mod_reduce(k - b, d), k);
      if (std::abs(s) / d >= 1.0 - tol) {
        const Cx phase = s / static_cast<double>(d);
        const double angle = std::arg(phase);
        const int nearest =
            mod_reduce(static_cast<long long>(std::llround(angle * d / (2.0 * M_PI))), d);
        return ConjugationResult{PauliLabel{nearest, b, c}, phase};
      }
    }
  }
  throw NotCliffordError("conjugation image is not in the generalized Pauli group");
}

std::vector<SymplecticAction> all_symplectic_actions(int d) {
  std::vector<SymplecticAction> out;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          if (mod_reduce(static_cast<long long>(i) * l - static_cast<long long>(j) * k,
                         d) == 1)
            out.push_back({i, j, k, l});
  return out;
}

CMatrix build_c_imn(int i, int m, int n, int d) {
  if (!is_prime(d))
    throw std::invalid_argument("build_c_imn: prime dimension required");
  if (!is_unit(i, d)) throw NotAUnitError("build_c_imn: i must be a unit mod d");
  const CMatrix p = phase_p_gate(d);
  return perm_gate_sc(i, d) * matrix_power(p, mod_reduce(m, d)) *
         matrix_power(clifford_q_gate(d), mod_reduce(n, d));
}

namespace {

std::string power_text(const char* sym, int e) {
  if (e == 0) return "";
  if (e == 1) return std::string(sym);
  return std::string(sym) + "^" + std::to_string(e);
}

void append_factor(std::string& text, int& length, const std::string& factor) {
  if (factor.empty()) return;
  if (!text.empty()) text += " ";
  text += factor;
  ++length;
}

}  // namespace

GeneratorWord realize_symplectic(const SymplecticAction& act, int d) {
  if (!is_prime(d))
    throw std::invalid_argument("realize_symplectic: prime dimension required");
  GeneratorWord word{"", CMatrix::Identity(d, d), 0};
  if (act.i != 0) {
    const int m = mod_reduce(-static_cast<long long>(act.i) * act.j, d);
    const int n = mod_reduce(static_cast<long long>(unit_inverse(act.i, d)) * act.k, d);
    word.matrix = build_c_imn(act.i, m, n, d);
    if (act.i != 1) append_factor(word.text, word.length, "S_" + std::to_string(act.i));
    append_factor(word.text, word.length, power_text("P", m));
    append_factor(word.text, word.length, power_text("Q", n));
  } else {
    // i = 0 forces j*k = -1. First realize X -> X^{-j}, Z -> X^{-l} Z^{k}
    // (a C(i', m', n') with i' = -j), then conjugate by F.
    const int ip = mod_reduce(-act.j, d);
    const int n = mod_reduce(static_cast<long long>(unit_inverse(act.j, d)) * act.l, d);
    word.matrix = fourier_gate(d) * build_c_imn(ip, 0, n, d);
    append_factor(word.text, word.length, "F");
    if (ip != 1) append_factor(word.text, word.length, "S_" + std::to_string(ip));
    append_factor(word.text, word.length, power_text("Q", n));
  }
  if (word.text.empty()) {
    word.text = "I";
  }
  return word;
}

GenerationReport verify_generation(int d, double tol) {
  GenerationReport report{d, {}, 0};
  for (const SymplecticAction& act : all_symplectic_actions(d)) {
    GeneratorWord word = realize_symplectic(act, d);
    bool pass = true;
    try {
      const auto img_x = conjugate_pauli(word.matrix, PauliLabel{0, 1, 0}, d, tol);
      const auto img_z = conjugate_pauli(word.matrix, PauliLabel{0, 0, 1}, d, tol);
      pass = img_x.label.x_exp == act.i && img_x.label.z_exp == act.j &&
             img_z.label.x_exp == act.k && img_z.label.z_exp == act.l;
    } catch (const NotCliffordError&) {
      pass = false;
    }
    if (!pass) ++report.failures;
    report.records.push_back(ActionRecord{act, word.text, word.length, pass});
  }
  return report;
}

}  // namespace qdc

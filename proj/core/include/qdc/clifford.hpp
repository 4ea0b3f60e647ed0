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

#ifndef QDC_CLIFFORD_HPP
#define QDC_CLIFFORD_HPP

#include <string>
#include <vector>

#include "qdc/gates.hpp"
#include "qdc/types.hpp"

namespace qdc {

// omega^phase_exp X^x_exp Z^z_exp. The phase exponent is tracked but all
// group-membership comparisons are projective.
struct PauliLabel {
  int phase_exp = 0;
  int x_exp = 0;
  int z_exp = 0;
};

CMatrix pauli_matrix(const PauliLabel& p, int d);

// alpha(A, B) defined by AB = omega^alpha BA. For A = X^{b1} Z^{c1},
// B = X^{b2} Z^{c2} this is b1*c2 - b2*c1 mod d; in particular
// alpha(X, Z) = 1.
int commutator_exponent(const PauliLabel& p, const PauliLabel& q, int d);

struct ConjugationResult {
  PauliLabel label;  // phase_exp is the nearest omega power
  Cx phase;          // the exact scalar in U P U^dag = phase * X^b Z^c
};

// Identifies U P U^dag as a Pauli-group element by overlap against all
// d^2 candidates; throws NotCliffordError when the image is not in the
// group (within tol).
ConjugationResult conjugate_pauli(const CMatrix& u, const PauliLabel& p, int d,
                                  double tol = kDefaultTol);

// Projective conjugation action X -> X^i Z^j, Z -> X^k Z^l. Commutation
// preservation forces i*l - j*k = 1 mod d.
struct SymplecticAction {
  int i, j, k, l;
};

std::vector<SymplecticAction> all_symplectic_actions(int d);

// C(i, m, n) = S_i P^m Q^n with Q = F P F^dag; conjugation by it maps
// X -> X^i Z^{-i^{-1} m} and Z -> X^{i n} Z^{i^{-1}(1 - m n)}.
CMatrix build_c_imn(int i, int m, int n, int d);

// A word in the generators {Z, X, F, S_c, P, Q} realizing one action.
struct GeneratorWord {
  std::string text;
  CMatrix matrix;
  int length;
};

// Constructive realization: C(i, -i*j, i^{-1}*k) when i != 0, and
// F . S_{-j} Q^{j^{-1} l} for the i = 0 actions.
GeneratorWord realize_symplectic(const SymplecticAction& act, int d);

struct ActionRecord {
  SymplecticAction action;
  std::string word;
  int word_length;
  bool pass;
};

struct GenerationReport {
  int d;
  std::vector<ActionRecord> records;  // sorted by (i, j, k, l)
  int failures;
};

// Enumerates all d(d^2-1) symplectic actions, realizes each as a
// generator word, and verifies the word's conjugation action numerically.
GenerationReport verify_generation(int d, double tol = kDefaultTol);

}  // namespace qdc

#endif  // QDC_CLIFFORD_HPP

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

#ifndef QDC_GATES_HPP
#define QDC_GATES_HPP

#include "qdc/modmath.hpp"
#include "qdc/phase_vector.hpp"
#include "qdc/types.hpp"

namespace qdc {

// omega^m with omega = e^{2*pi*i/d}; m is reduced mod d before the trig
// call so large exponents do not lose precision.
Cx omega_pow(int d, long long m);

// F = (1/sqrt(d)) sum_{j,k} omega^{jk} |j><k|. The d-dimensional quantum
// Fourier transform; for d=2 this is the Hadamard gate.
CMatrix fourier_gate(int d);

// Generalized Pauli shift: X|k> = |k-1 mod d>.
CMatrix pauli_x(int d);

// Generalized Pauli clock: Z|k> = omega^k |k>.
CMatrix pauli_z(int d);

// Both generalized Paulis at once.
std::pair<CMatrix, CMatrix> pauli_gates(int d);

// Z(a) = sum_k e^{i a_k} |k><k|.
CMatrix phase_gate(const PhaseVector& a);

// S_c = sum_k |c*k mod d><k| for a unit c. Satisfies S_c S_e = S_{ce}.
CMatrix perm_gate_sc(int c, int d);
CMatrix perm_gate_sc(const ModUnit& c);

// CZ^power = sum_{k,l} omega^{power*k*l} |kl><kl| on two qudits.
// power=1 is the cluster interaction, power=-1 the controlled-Z inverse.
CMatrix controlled_z(int d, int power = 1);

// P: |j> -> omega^{j(j+1)/2} |j>, the Clifford phase gate. For odd d the
// 1/2 is the mod-d inverse of 2. For d=2 the half-power of omega is taken
// literally (omega^{1/2} = i), giving diag(1, i); the integer reading
// j(j+1)/2 would collapse P to Z, which cannot generate the qubit
// Clifford group.
CMatrix phase_p_gate(int d);

// Q = F P F^dag.
CMatrix clifford_q_gate(int d);

// Two-qudit swap V.
CMatrix swap_gate(int d);

// Kronecker product, left factor most significant.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// U on qudit q of an n-qudit register, identity elsewhere.
CMatrix embed_single(const CMatrix& u, int q, int n, int d);

// |+_j> = F|j> as a (normalized) column vector.
CVector plus_state(int d, int j = 0);

// ||U U^dag - I||_max.
double unitarity_defect(const CMatrix& u);

// Throws std::invalid_argument unless u is unitary within tol.
void require_unitary(const CMatrix& u, double tol = kBasisUnitaryTol,
                     const char* what = "matrix");

CMatrix matrix_power(const CMatrix& u, int k);

}  // namespace qdc

#endif  // QDC_GATES_HPP

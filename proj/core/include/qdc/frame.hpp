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

#ifndef QDC_FRAME_HPP
#define QDC_FRAME_HPP

#include <vector>

#include "qdc/gates.hpp"
#include "qdc/phase_vector.hpp"
#include "qdc/types.hpp"

namespace qdc {

// Per-qudit record of the accumulated correctable error, canonically
// ordered X^x Z^z S_c (left to right). Global phases are discarded.
struct FrameEntry {
  int x = 0;
  int z = 0;
  int c = 1;
  bool is_identity() const { return x == 0 && z == 0 && c == 1; }
};

// Classical side-record of the byproduct operators a cluster computation
// accumulates: one X^x Z^z S_c entry per logical qudit plus an optional
// register permutation (only the two-qudit swap is ever introduced).
//
// The tracked operator is realize() = (tensor_q X^{x_q} Z^{z_q} S_{c_q})
// composed on the right with the permutation; it is never applied to the
// quantum state except for verification and final readout correction.
class ErrorFrame {
 public:
  ErrorFrame(int dim, int num_qudits);

  int dim() const { return d_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const FrameEntry& entry(int q) const;
  bool is_identity() const;

  // One-dit teleportation with outcome m on qudit q:
  //   (x, z, c) -> (m + z, -x, c^{-1})   (mod d).
  // With c = 1 this is the pure Pauli rule x' = m + z, z' = -x; the
  // inversion of c comes from pulling F through S_c (F S_c = S_{c^{-1}} F).
  void absorb_teleport(int q, int outcome);

  // Adaptive computation F = S_c F_c on qudit q: composes S_c into the
  // frame, c_q -> c * c_q, so the computation proceeds as if
  // F_c = S_{c^{-1}} F had been applied.
  void absorb_adaptive_fc(int q, const ModUnit& c);

  // Pulls the frame left through a CZ applied to (q1, q2):
  //   z1 -> z1 - x2,  z2 -> z2 - x1   (x unchanged),
  // and returns the residual interaction power c1*c2 mod d: the physical
  // CZ acts as C[Z^{c1*c2}] behind the frame, which the caller must
  // account for in its intended gate.
  int commute_through_cz(int q1, int q2);

  // Introduces a swap error V on qudits (q1, q2): entries swap and the
  // register permutation composes.
  void compose_swap(int q1, int q2);

  // The phase vector actually measured so that the step implements
  // F Z(base) behind this frame: shift by -x, index-scale by c^{-1}.
  PhaseVector adapted_phase_vector(int q, const PhaseVector& base) const;

  // Explicit unitary of the tracked error on the full register.
  CMatrix realize() const;

  // Inverts the frame's label action on computational outcomes:
  // corrected = c^{-1} (k + x) mod d per qudit, undoing the permutation
  // part of X^x S_c (Z exponents only change phases). With a register
  // permutation, outcome slots are routed back first.
  std::vector<int> correct_readout(const std::vector<int>& outcomes) const;

  const std::vector<int>& register_perm() const { return perm_; }

 private:
  void check_qudit(int q) const;
  int d_;
  std::vector<FrameEntry> entries_;
  std::vector<int> perm_;  // realize() routes qudit perm_[i]'s content to slot i
};

// Largest residual of the swap identities V(A (x) B) = (B (x) A)V,
// V^2 = I, and CZ_{12} V_{23} = V_{23} CZ_{13}, on random A, B.
double swap_identities_defect(int d, std::uint64_t seed = 7);

// True iff the swap identities hold within tol.
bool verify_swap_identities(int d, double tol = kDefaultTol,
                            std::uint64_t seed = 7);

}  // namespace qdc

#endif  // QDC_FRAME_HPP

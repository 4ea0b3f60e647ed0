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

#include "qdc/frame.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "qdc/random.hpp"

namespace qdc {

ErrorFrame::ErrorFrame(int dim, int num_qudits)
    : d_(dim), entries_(num_qudits), perm_(num_qudits) {
  if (dim < 2) throw std::invalid_argument("ErrorFrame: dimension must be >= 2");
  std::iota(perm_.begin(), perm_.end(), 0);
}

void ErrorFrame::check_qudit(int q) const {
  if (q < 0 || q >= size())
    throw std::invalid_argument("ErrorFrame: qudit " + std::to_string(q) +
                                " out of range");
}

const FrameEntry& ErrorFrame::entry(int q) const {
  check_qudit(q);
  return entries_[q];
}

bool ErrorFrame::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (!entries_[i].is_identity() || perm_[i] != i) return false;
  return true;
}

void ErrorFrame::absorb_teleport(int q, int outcome) {
  check_qudit(q);
  FrameEntry& e = entries_[q];
  const int new_x = mod_reduce(outcome + e.z, d_);
  const int new_z = mod_reduce(-e.x, d_);
  const int new_c = unit_inverse(e.c, d_);
  e = FrameEntry{new_x, new_z, new_c};
}

void ErrorFrame::absorb_adaptive_fc(int q, const ModUnit& c) {
  check_qudit(q);
  if (c.modulus != d_)
    throw std::invalid_argument("absorb_adaptive_fc: modulus mismatch");
  entries_[q].c = mod_reduce(static_cast<long long>(c.value) * entries_[q].c, d_);
}

int ErrorFrame::commute_through_cz(int q1, int q2) {
  check_qudit(q1);
  check_qudit(q2);
  if (q1 == q2) throw std::invalid_argument("commute_through_cz: identical qudits");
  FrameEntry& e1 = entries_[q1];
  FrameEntry& e2 = entries_[q2];
  const int z1 = mod_reduce(e1.z - e2.x, d_);
  const int z2 = mod_reduce(e2.z - e1.x, d_);
  e1.z = z1;
  e2.z = z2;
  return mod_reduce(static_cast<long long>(e1.c) * e2.c, d_);
}

void ErrorFrame::compose_swap(int q1, int q2) {
  check_qudit(q1);
  check_qudit(q2);
  if (q1 == q2) throw std::invalid_argument("compose_swap: identical qudits");
  std::swap(entries_[q1], entries_[q2]);
  std::swap(perm_[q1], perm_[q2]);
}

PhaseVector ErrorFrame::adapted_phase_vector(int q, const PhaseVector& base) const {
  check_qudit(q);
  if (base.size() != d_)
    throw std::invalid_argument("adapted_phase_vector: wrong phase vector length");
  const FrameEntry& e = entries_[q];
  return shift_phase_vector(scale_phase_vector(base, unit_inverse(e.c, d_)), -e.x);
}

CMatrix ErrorFrame::realize() const {
  const int n = size();
  CMatrix op = CMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    const FrameEntry& e = entries_[q];
    CMatrix u = matrix_power(pauli_x(d_), e.x) * matrix_power(pauli_z(d_), e.z) *
                perm_gate_sc(e.c, d_);
    op = kron(op, u);
  }
  // Permutation factor: routes qudit perm_[i]'s content to slot i.
  bool trivial = true;
  for (int i = 0; i < n; ++i)
    if (perm_[i] != i) trivial = false;
  if (trivial) return op;

  Eigen::Index total = 1;
  for (int i = 0; i < n; ++i) total *= d_;
  CMatrix p = CMatrix::Zero(total, total);
  std::vector<int> digits(n);
  for (Eigen::Index col = 0; col < total; ++col) {
    Eigen::Index rest = col;
    for (int q = n - 1; q >= 0; --q) {
      digits[q] = static_cast<int>(rest % d_);
      rest /= d_;
    }
    Eigen::Index row = 0;
    for (int q = 0; q < n; ++q) row = row * d_ + digits[perm_[q]];
    p(row, col) = 1.0;
  }
  return op * p;
}

std::vector<int> ErrorFrame::correct_readout(const std::vector<int>& outcomes) const {
  const int n = size();
  if (static_cast<int>(outcomes.size()) != n)
    throw std::invalid_argument("correct_readout: outcome count mismatch");
  std::vector<int> corrected(n, 0);
  for (int i = 0; i < n; ++i) {
    const int k = outcomes[i];
    if (k < 0 || k >= d_)
      throw std::invalid_argument("correct_readout: outcome out of range");
    const FrameEntry& e = entries_[i];
    const int label = mod_reduce(
        static_cast<long long>(unit_inverse(e.c, d_)) * (k + e.x), d_);
    corrected[perm_[i]] = label;
  }
  return corrected;
}

double swap_identities_defect(int d, std::uint64_t seed) {
  Rng rng(seed);
  const CMatrix v = swap_gate(d);
  const CMatrix a = rng.unitary(d);
  const CMatrix b = rng.unitary(d);
  double worst = (v * kron(a, b) - kron(b, a) * v).cwiseAbs().maxCoeff();
  worst = std::max(worst,
                   (v * v - CMatrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff());

  // CZ_{12} V_{23} = V_{23} CZ_{13} on three qudits.
  const CMatrix id = CMatrix::Identity(d, d);
  const CMatrix cz12 = kron(controlled_z(d), id);
  const CMatrix v23 = kron(id, v);
  CMatrix cz13 = CMatrix::Zero(d * d * d, d * d * d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m)
      for (int l = 0; l < d; ++l) {
        const Eigen::Index idx = (static_cast<Eigen::Index>(k) * d + m) * d + l;
        cz13(idx, idx) = omega_pow(d, static_cast<long long>(k) * l);
      }
  return std::max(worst, (cz12 * v23 - v23 * cz13).cwiseAbs().maxCoeff());
}

bool verify_swap_identities(int d, double tol, std::uint64_t seed) {
  return swap_identities_defect(d, seed) <= tol;
}

}  // namespace qdc

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

#ifndef QDC_STATE_HPP
#define QDC_STATE_HPP

#include <vector>

#include "qdc/gates.hpp"
#include "qdc/types.hpp"

namespace qdc {

// Dense state vector over (C^d)^n. Qudit 0 is the leftmost tensor factor:
// the amplitude of |k_0 k_1 ... k_{n-1}> sits at index
// sum_i k_i * d^{n-1-i}.
class StateVector {
 public:
  // |0...0> of n qudits.
  StateVector(int d, int n);
  // Wraps existing amplitudes (size must be d^n).
  StateVector(int d, int n, CVector amplitudes);

  // |digits[0] digits[1] ...>.
  static StateVector computational(int d, const std::vector<int>& digits);
  // |+>^n, every qudit in the uniform superposition F|0>.
  static StateVector all_plus(int d, int n);
  // Single-qudit state from a column vector.
  static StateVector single(int d, const CVector& amplitudes);

  int dim() const { return d_; }
  int num_qudits() const { return n_; }
  Eigen::Index size() const { return amps_.size(); }
  const CVector& amplitudes() const { return amps_; }
  CVector& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }
  void normalize();

  // In-place single-qudit gate.
  void apply_single(const CMatrix& u, int q);
  // In-place CZ^power between two qudits (diagonal, so applied as phases).
  void apply_cz(int q1, int q2, int power = 1);
  // Reorders the register so that new qudit i is old qudit perm[i].
  void permute_qudits(const std::vector<int>& perm);

  // this (x) other.
  StateVector tensor(const StateVector& other) const;

  // Amplitude of a computational basis element given its digits.
  Cx amplitude(const std::vector<int>& digits) const;

  // digit q of basis index idx.
  int digit(Eigen::Index idx, int q) const;

 private:
  void check_qudit(int q) const;
  int d_;
  int n_;
  CVector amps_;
};

}  // namespace qdc

#endif  // QDC_STATE_HPP

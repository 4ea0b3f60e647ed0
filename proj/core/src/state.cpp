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

#include "qdc/state.hpp"

#include <cmath>
#include <string>

namespace qdc {

namespace {

Eigen::Index pow_ll(int d, int n) {
  Eigen::Index out = 1;
  for (int i = 0; i < n; ++i) out *= d;
  return out;
}

}  // namespace

StateVector::StateVector(int d, int n) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("StateVector: dimension must be >= 2");
  if (n < 0) throw std::invalid_argument("StateVector: negative qudit count");
  amps_ = CVector::Zero(pow_ll(d, n));
  amps_(0) = 1.0;
}

StateVector::StateVector(int d, int n, CVector amplitudes) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("StateVector: dimension must be >= 2");
  if (amplitudes.size() != pow_ll(d, n))
    throw std::invalid_argument("StateVector: amplitude count != d^n");
  amps_ = std::move(amplitudes);
}

StateVector StateVector::computational(int d, const std::vector<int>& digits) {
  StateVector s(d, static_cast<int>(digits.size()));
  Eigen::Index idx = 0;
  for (int k : digits) {
    if (k < 0 || k >= d) throw std::invalid_argument("computational: digit out of range");
    idx = idx * d + k;
  }
  s.amps_.setZero();
  s.amps_(idx) = 1.0;
  return s;
}

StateVector StateVector::all_plus(int d, int n) {
  StateVector s(d, n);
  const double a = std::pow(static_cast<double>(d), -0.5 * n);
  s.amps_.setConstant(a);
  return s;
}

StateVector StateVector::single(int d, const CVector& amplitudes) {
  if (amplitudes.size() != d)
    throw std::invalid_argument("StateVector::single: size != d");
  return StateVector(d, 1, amplitudes);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::runtime_error("StateVector: cannot normalize zero vector");
  amps_ /= n;
}

void StateVector::check_qudit(int q) const {
  if (q < 0 || q >= n_)
    throw std::invalid_argument("StateVector: qudit " + std::to_string(q) +
                                " out of range for n=" + std::to_string(n_));
}

void StateVector::apply_single(const CMatrix& u, int q) {
  check_qudit(q);
  if (u.rows() != d_ || u.cols() != d_)
    throw std::invalid_argument("apply_single: gate is not d x d");
  const Eigen::Index inner = pow_ll(d_, n_ - 1 - q);
  const Eigen::Index outer = pow_ll(d_, q);
  const Eigen::Index block = inner * d_;
  CVector scratch(d_);
  for (Eigen::Index o = 0; o < outer; ++o) {
    const Eigen::Index base = o * block;
    for (Eigen::Index i = 0; i < inner; ++i) {
      for (int k = 0; k < d_; ++k) scratch(k) = amps_(base + k * inner + i);
      for (int r = 0; r < d_; ++r) {
        Cx acc = 0.0;
        for (int k = 0; k < d_; ++k) acc += u(r, k) * scratch(k);
        amps_(base + r * inner + i) = acc;
      }
    }
  }
}

void StateVector::apply_cz(int q1, int q2, int power) {
  check_qudit(q1);
  check_qudit(q2);
  if (q1 == q2) throw std::invalid_argument("apply_cz: identical qudits");
  // Precompute omega^{power*k*l}.
  CMatrix phases(d_, d_);
  for (int k = 0; k < d_; ++k)
    for (int l = 0; l < d_; ++l)
      phases(k, l) = omega_pow(d_, static_cast<long long>(power) * k * l);
  for (Eigen::Index idx = 0; idx < amps_.size(); ++idx) {
    const int k = digit(idx, q1);
    const int l = digit(idx, q2);
    amps_(idx) *= phases(k, l);
  }
}

void StateVector::permute_qudits(const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permute_qudits: wrong permutation size");
  CVector out(amps_.size());
  std::vector<int> digits(n_);
  for (Eigen::Index idx = 0; idx < amps_.size(); ++idx) {
    for (int q = 0; q < n_; ++q) digits[q] = digit(idx, q);
    Eigen::Index tgt = 0;
    for (int q = 0; q < n_; ++q) tgt = tgt * d_ + digits[perm[q]];
    out(tgt) = amps_(idx);
  }
  amps_ = std::move(out);
}

StateVector StateVector::tensor(const StateVector& other) const {
  if (other.d_ != d_) throw std::invalid_argument("tensor: dimension mismatch");
  CVector out(amps_.size() * other.amps_.size());
  for (Eigen::Index i = 0; i < amps_.size(); ++i)
    out.segment(i * other.amps_.size(), other.amps_.size()) = amps_(i) * other.amps_;
  return StateVector(d_, n_ + other.n_, std::move(out));
}

Cx StateVector::amplitude(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) != n_)
    throw std::invalid_argument("amplitude: wrong digit count");
  Eigen::Index idx = 0;
  for (int k : digits) idx = idx * d_ + k;
  return amps_(idx);
}

int StateVector::digit(Eigen::Index idx, int q) const {
  return static_cast<int>((idx / pow_ll(d_, n_ - 1 - q)) % d_);
}

}  // namespace qdc

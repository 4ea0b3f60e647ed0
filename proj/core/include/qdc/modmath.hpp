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

#ifndef QDC_MODMATH_HPP
#define QDC_MODMATH_HPP

#include <vector>

#include "qdc/types.hpp"

namespace qdc {

// Reduces v into [0, d).
int mod_reduce(long long v, int d);

bool is_prime(int d);

// True iff gcd(c, d) == 1.
bool is_unit(int c, int d);

// Multiplicative inverse of c mod d via the extended Euclidean algorithm.
// Throws NotAUnitError when gcd(c, d) != 1.
int unit_inverse(int c, int d);

// Inverse of 2 mod d, defined for odd d only. Used wherever a 1/2 appears
// in a mod-d exponent.
int half_inverse(int d);

// All units of Z_d in increasing order.
std::vector<int> units_of(int d);

// A validated unit of Z_d, stored reduced into [1, d).
struct ModUnit {
  ModUnit(int value, int modulus);
  int value;
  int modulus;
  ModUnit inverse() const { return ModUnit(unit_inverse(value, modulus), modulus); }
};

// --- permutations of {0, ..., d-1} --------------------------------------
//
// A permutation p maps label k to p[k]. These helpers back the closure
// check on the group generated by the basis-label actions of X and S_c.

using Perm = std::vector<int>;

// Label action of X: k -> k-1 (mod d).
Perm shift_perm(int d);

// Label action of S_c: k -> c*k (mod d).
Perm mult_perm(int c, int d);

Perm compose_perms(const Perm& first, const Perm& then);

// Order of the permutation group generated by `generators` (BFS closure).
std::size_t permutation_group_order(const std::vector<Perm>& generators);

}  // namespace qdc

#endif  // QDC_MODMATH_HPP

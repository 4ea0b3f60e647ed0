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

#include "qdc/modmath.hpp"

#include <numeric>
#include <set>
#include <string>

namespace qdc {

int mod_reduce(long long v, int d) {
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  long long r = v % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p)
    if (d % p == 0) return false;
  return true;
}

bool is_unit(int c, int d) {
  if (d < 2) return false;
  return std::gcd(mod_reduce(c, d), d) == 1;
}

int unit_inverse(int c, int d) {
  int a = mod_reduce(c, d);
  if (!is_unit(a, d))
    throw NotAUnitError(std::to_string(c) + " is not a unit mod " + std::to_string(d));
  // Extended Euclid on (a, d): track s with s*a ≡ gcd mod d.
  int r0 = a, r1 = d;
  int s0 = 1, s1 = 0;
  while (r1 != 0) {
    int q = r0 / r1;
    int r2 = r0 - q * r1;
    int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return mod_reduce(s0, d);
}

int half_inverse(int d) {
  if (d % 2 == 0)
    throw std::invalid_argument("1/2 mod d requires odd d, got d=" + std::to_string(d));
  return unit_inverse(2, d);
}

std::vector<int> units_of(int d) {
  std::vector<int> out;
  for (int c = 1; c < d; ++c)
    if (is_unit(c, d)) out.push_back(c);
  return out;
}

ModUnit::ModUnit(int v, int m) : value(mod_reduce(v, m)), modulus(m) {
  if (!is_unit(value, modulus))
    throw NotAUnitError(std::to_string(v) + " is not a unit mod " + std::to_string(m));
}

Perm shift_perm(int d) {
  Perm p(d);
  for (int k = 0; k < d; ++k) p[k] = mod_reduce(k - 1, d);
  return p;
}

Perm mult_perm(int c, int d) {
  if (!is_unit(c, d))
    throw NotAUnitError(std::to_string(c) + " is not a unit mod " + std::to_string(d));
  Perm p(d);
  for (int k = 0; k < d; ++k) p[k] = mod_reduce(static_cast<long long>(c) * k, d);
  return p;
}

Perm compose_perms(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) out[k] = then[first[k]];
  return out;
}

std::size_t permutation_group_order(const std::vector<Perm>& generators) {
  if (generators.empty()) return 1;
  const std::size_t d = generators[0].size();
  Perm id(d);
  for (std::size_t k = 0; k < d; ++k) id[k] = static_cast<int>(k);

  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : generators) {
        Perm q = compose_perms(p, g);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace qdc

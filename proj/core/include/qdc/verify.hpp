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

#ifndef QDC_VERIFY_HPP
#define QDC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qdc/types.hpp"

namespace qdc {

// One named check. The residual is reported even on pass so tolerance
// headroom stays visible.
struct CheckResult {
  std::string check;
  int dim;
  double residual;
  bool pass;
};

struct SuiteConfig {
  int dim = 3;
  double tolerance = kDefaultTol;
  std::uint64_t seed = 0;
};

// The operator identities the error-frame algebra rests on: the action of
// Z and X on the Fourier basis, the Z(a)/F/S_c commutation rules, the
// CZ pull-through rules, XZ = omega ZX, the swap identities, and the
// order of the label-permutation group generated by X and S_c.
std::vector<CheckResult> identities_suite(const SuiteConfig& cfg);

// Mutually unbiased bases: overlap flatness, spanning rank d^2, the
// eigenphase relation behind the b_k construction. Prime dimensions only.
std::vector<CheckResult> mub_suite(const SuiteConfig& cfg);

// Clifford generation: every symplectic action realized by a generator
// word, with the expected action count d(d^2-1). Prime dimensions only.
std::vector<CheckResult> clifford_suite(const SuiteConfig& cfg);

// Random graphs: stabilizer eigen-equations and Z-measurement removal.
std::vector<CheckResult> stabilizer_suite(const SuiteConfig& cfg);

// Dispatch by name: "identities", "mub", "clifford", "stabilizer", "all".
// Unknown names throw std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qdc

#endif  // QDC_VERIFY_HPP

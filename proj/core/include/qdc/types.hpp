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

#ifndef QDC_TYPES_HPP
#define QDC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdc {

using Cx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Default tolerance for state/gate comparisons modulo global phase.
inline constexpr double kDefaultTol = 1e-10;
// A gate constructor must satisfy ||U U^dag - I||_max below this bound.
inline constexpr double kUnitaryTol = 1e-12;
// Measurement bases are rejected when further from unitary than this.
inline constexpr double kBasisUnitaryTol = 1e-8;
// Branches with probability below this are dropped from enumerations.
inline constexpr double kBranchPruneTol = 1e-14;

// c has no multiplicative inverse mod d (e.g. 2 in Z_4).
struct NotAUnitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Conjugation left the generalized Pauli group.
struct NotCliffordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cluster/pattern combination that the row-wise teleportation engine
// cannot evaluate.
struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph or pattern file; `line` is 1-based.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

}  // namespace qdc

#endif  // QDC_TYPES_HPP

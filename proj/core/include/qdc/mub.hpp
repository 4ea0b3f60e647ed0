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

#ifndef QDC_MUB_HPP
#define QDC_MUB_HPP

#include <string>
#include <vector>

#include "qdc/teleport.hpp"
#include "qdc/types.hpp"

namespace qdc {

// Integer exponents alpha_l of the eigenvector
// |psi^k_0> = (1/sqrt(d)) sum_l omega^{alpha_l} |l> of Z X^k, satisfying
// alpha_{l+k} + l = alpha_l (mod d, indices mod d) with alpha_0 = 0.
struct AlphaVector {
  int d;
  int k;
  std::vector<int> exps;
};

// Unique solution of the recurrence; requires an odd prime d (the
// recurrence is self-consistent only for odd d) and a unit k.
AlphaVector solve_alpha(int d, int k);

// The phase vector b_k with angles 2*pi*alpha_l/d, so Z(b_k)|+_j> lands on
// an eigenvector of Z X^k.
PhaseVector alpha_phase_vector(const AlphaVector& alpha);

// d+1 mutually unbiased bases of C^d for prime d: computational (Z),
// Fourier (X), then the eigenbases of Z X^k for k = 1..d-1. Column j of
// basis k+1 is |psi^k_j>, the omega^j eigenvector, with the phase
// convention |psi^k_j> = X^{-j} |psi^k_0>. For d=2 the third basis is
// {(|0>+i|1>)/sqrt(2), (|0>-i|1>)/sqrt(2)} via b = (0, pi).
struct MubFamily {
  int d;
  std::vector<CMatrix> bases;
  std::vector<std::string> labels;       // "Z", "X", "ZX", "ZX^2", ...
  std::vector<PhaseVector> b_vectors;    // b_k for k = 1..d-1
};

MubFamily build_mub_family(int d);

// Largest |<a_i|b_j>| deviation from 1/sqrt(d) over all cross-basis pairs.
double mub_overlap_defect(const MubFamily& family);

// Checks Z(b_k)|+_j> = omega^{(1/2) j(j+1) k} |psi^k_{jk}> exactly (not
// just up to phase), and that |psi^k_j> is the omega^j eigenvector of
// Z X^k. Odd prime d only.
bool eigenphase_relation_check(int d, int k, double tol = kDefaultTol);
double eigenphase_relation_defect(int d, int k);

// Rank of the real span of the d(d+1) basis projectors inside the
// d^2-dimensional space of Hermitian matrices (singular values above
// 1e-8 count).
int spanning_rank(const MubFamily& family);

// ---- gate compilation (prime d) -----------------------------------------

enum class GateClass {
  ZPhase,       // Z(a) = sum e^{i a_k} |k><k|
  XPhase,       // X(a) = sum e^{i a_k} |+_k><+_k|
  ZXkPhase,     // ZX^k(a): phases on the Z X^k eigenbasis
  FourierStep,  // the teleportation primitive F Z(a) itself
};

std::string gate_class_name(GateClass cls);

// X(a) = F Z(a) F^dag.
CMatrix x_phase_gate(const PhaseVector& a);

// ZX^k(a) = sum_j e^{i a_j} |psi^k_j><psi^k_j|.
CMatrix zxk_phase_gate(const PhaseVector& a, int k);

// A measurement pattern on a linear cluster implementing the gate up to
// the tracked error frame. Z(a) and X(a) compile to two steps, ZX^k(a)
// to four; every F^dag factor is realized by adaptive computation
// F = S_{-1} F^dag rather than by three extra teleportations.
struct CompiledGate {
  GateClass cls;
  int k;  // meaningful for ZXkPhase
  PhaseVector a;
  MeasurementPattern pattern;
  CMatrix expected;
};

CompiledGate compile_gate(GateClass cls, const PhaseVector& a, int d, int k = 1);

// Linear cluster sized for the compiled pattern (steps + 1 vertices).
ClusterGraph pattern_cluster(const CompiledGate& gate, int d);

// ---- numeric universality demonstration ----------------------------------
//
// Decomposes an arbitrary unitary into a short product of Z(a)/X(a)
// factors by coordinate ascent on |tr(G^dag U)| (each factor update is
// exact), then compiles every factor. The spanning property of the MUB
// projectors guarantees a decomposition exists but gives no construction,
// so this is a numeric search with restarts, not a closed form.

struct DecompositionOptions {
  int max_factors = 12;
  int iterations = 10000;  // total factor updates per restart
  int restarts = 8;
  std::uint64_t seed = 1;
  double target_fidelity = 1.0 - 1e-6;
};

struct UnitaryDecomposition {
  std::vector<CompiledGate> factors;  // application order: factors[0] first
  double fidelity;                    // |tr(G^dag U)| / d of the product
  bool converged;
};

UnitaryDecomposition decompose_unitary(const CMatrix& u, int d,
                                       const DecompositionOptions& opts = {});

}  // namespace qdc

#endif  // QDC_MUB_HPP

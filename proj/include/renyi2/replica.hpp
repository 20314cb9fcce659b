// Copyright 2026 The renyi2 Authors
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

#ifndef RENYI2_REPLICA_HPP
#define RENYI2_REPLICA_HPP

#include "renyi2/channel.hpp"
#include "renyi2/matrix_ops.hpp"

namespace renyi2 {

// Replica construction: the output purity of a channel L with Kraus family
// {v_a} linearizes over a doubled space,
//
//   tr L(rho)^2 = tr[ (rho (x) rho) K ],   K = (sum_ab v_a^dag v_b (x) v_b^dag v_a) F,
//
// with F the swap operator. K lives on the doubled *input* space. The
// companion two-site interaction operator lives on the doubled *output*
// space; we store its negative,
//
//   -h = (sum_ab v_a v_b^dag (x) v_b v_a^dag) F,
//
// which is also the image of the unnormalized maximally entangled projector
// under L (x) (L o T) and is therefore PSD whenever L o T is completely
// positive (every PPT-inducing channel). Positivity of -h, or of (-h) F,
// certifies that the channel's minimal order-2 Renyi output entropy is
// additive under tensoring with any other channel.

// Tolerance for the agreement of the two independent constructions of -h.
inline constexpr double kReplicaConsistencyTol = 1e-9;

/// Operator K on the doubled input space with tr L(rho)^2 = tr[(rho (x) rho) K].
struct PurityOperator {
  int d_in = 0;
  CMat matrix;  // d_in^2 x d_in^2
};

/// The operator -h on the doubled output space, plus its product with the
/// swap. -h commutes with F, so both stored matrices are Hermitian.
struct ReplicaOperator {
  int d = 0;           // output dimension
  CMat matrix;         // -h, d^2 x d^2
  CMat flip_product;   // (-h) F
};

/// Outcome of the two positivity tests on -h, with the backing eigenvalues.
struct PositivityConditions {
  bool h_positive = false;       // -h >= 0
  bool hF_positive = false;      // (-h) F >= 0
  double h_min_eigenvalue = 0.0;
  double hF_min_eigenvalue = 0.0;
};

PurityOperator purity_operator(const QuantumChannel& ch);

/// Evaluates tr[(rho (x) rho) K] (real part; the value is real for
/// Hermitian rho).
double purity_via_operator(const PurityOperator& op, const CMat& rho);

/// Builds -h by two independent routes — the Kraus double sum and the
/// matrix-unit image of the maximally entangled projector under
/// ch (x) (ch o T) — and checks they agree to kReplicaConsistencyTol.
/// Disagreement signals an index-convention bug and throws
/// std::runtime_error.
ReplicaOperator h_operator(const QuantumChannel& ch);

PositivityConditions positivity_conditions(const QuantumChannel& ch);
PositivityConditions positivity_conditions(const ReplicaOperator& op);

/// -h of the product channel ch1 (x) ch2 on the four-factor space
/// (H (x) K) (x) (H (x) K), built both from the product Kraus family and by
/// conjugating (-h1) (x) (-h2) with the permutation that swaps the middle
/// factors. The two constructions must agree to kReplicaConsistencyTol.
CMat joint_h_operator(const QuantumChannel& ch1, const QuantumChannel& ch2);

}  // namespace renyi2

#endif  // RENYI2_REPLICA_HPP

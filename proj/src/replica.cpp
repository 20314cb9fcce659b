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

#include "renyi2/replica.hpp"

#include <stdexcept>
#include <string>

namespace renyi2 {

namespace {

// acc += a (x) b without materializing the product (the pair sums below
// would otherwise allocate one d^2 x d^2 temporary per Kraus pair).
void add_tensor_into(CMat& acc, const CMat& a, const CMat& b) {
  const Eigen::Index rb = b.rows(), cb = b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      acc.block(i * rb, j * cb, rb, cb).noalias() += a(i, j) * b;
}

// (sum_ab v_a s(v_b) (x) v_b s(v_a)) F with s = adjoint taken on the right
// factor of each product. With products v_a^dag v_b this is the purity
// operator on the input space; with v_a v_b^dag it is -h on the output space.
CMat kraus_pair_sum(const std::vector<CMat>& kraus, bool dagger_left) {
  const Eigen::Index d = dagger_left ? kraus.front().cols() : kraus.front().rows();
  CMat acc = CMat::Zero(d * d, d * d);
  CMat left(d, d), right(d, d);
  for (const CMat& va : kraus)
    for (const CMat& vb : kraus) {
      if (dagger_left) {
        left.noalias() = va.adjoint() * vb;
        right.noalias() = vb.adjoint() * va;
      } else {
        left.noalias() = va * vb.adjoint();
        right.noalias() = vb * va.adjoint();
      }
      add_tensor_into(acc, left, right);
    }
  return acc * flip_operator(static_cast<int>(d));
}

// sum_ij images[i,j] (x) images[j,i]: the image of the unnormalized
// maximally entangled projector under M (x) (M o T), assembled from the
// matrix-unit images of M.
CMat projector_image(const LinearMap& map) {
  const int din = map.dim_in();
  const Eigen::Index dout = map.dim_out();
  CMat acc = CMat::Zero(dout * dout, dout * dout);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      add_tensor_into(acc, map.unit_image(i, j), map.unit_image(j, i));
  return acc;
}

void check_agreement(const CMat& a, const CMat& b, const char* what) {
  const double diff = max_abs(a - b);
  const double scale = std::max(1.0, max_abs(a));
  if (diff > kReplicaConsistencyTol * scale)
    throw std::runtime_error(std::string(what) +
                             ": independent constructions disagree by " +
                             std::to_string(diff));
}

}  // namespace

PurityOperator purity_operator(const QuantumChannel& ch) {
  return PurityOperator{ch.dim_in, kraus_pair_sum(ch.kraus, /*dagger_left=*/true)};
}

double purity_via_operator(const PurityOperator& op, const CMat& rho) {
  if (rho.rows() != op.d_in || rho.cols() != op.d_in)
    throw std::invalid_argument("purity_via_operator: dimension mismatch");
  return (tensor(rho, rho) * op.matrix).trace().real();
}

ReplicaOperator h_operator(const QuantumChannel& ch) {
  CMat minus_h = kraus_pair_sum(ch.kraus, /*dagger_left=*/false);
  const CMat via_projector = projector_image(LinearMap::from_channel(ch));
  check_agreement(minus_h, via_projector, "h_operator");

  const int d = ch.dim_out;
  const CMat f = flip_operator(d);
  check_agreement(f * minus_h * f, minus_h, "h_operator (swap commutation)");
  CMat flip_product = minus_h * f;
  return ReplicaOperator{d, std::move(minus_h), std::move(flip_product)};
}

PositivityConditions positivity_conditions(const ReplicaOperator& op) {
  PositivityConditions out;
  out.h_min_eigenvalue = min_eigenvalue(op.matrix);
  out.hF_min_eigenvalue = min_eigenvalue(0.5 * (op.flip_product + op.flip_product.adjoint()));
  out.h_positive =
      out.h_min_eigenvalue >= -kPositivityTol * std::max(1.0, max_abs(op.matrix));
  out.hF_positive = out.hF_min_eigenvalue >=
                    -kPositivityTol * std::max(1.0, max_abs(op.flip_product));
  return out;
}

PositivityConditions positivity_conditions(const QuantumChannel& ch) {
  return positivity_conditions(h_operator(ch));
}

CMat joint_h_operator(const QuantumChannel& ch1, const QuantumChannel& ch2) {
  const QuantumChannel product = tensor_channel(ch1, ch2);
  CMat direct = kraus_pair_sum(product.kraus, /*dagger_left=*/false);

  // Factor route: lay (-h1) (x) (-h2) out on H (x) H (x) K (x) K, then
  // reorder the middle factors to reach (H (x) K) (x) (H (x) K).
  const ReplicaOperator h1 = h_operator(ch1);
  const ReplicaOperator h2 = h_operator(ch2);
  const int d1 = ch1.dim_out, d2 = ch2.dim_out;
  const CMat q = permute_tensor_factors({d1, d1, d2, d2}, {0, 2, 1, 3});
  const CMat via_factors = q * tensor(h1.matrix, h2.matrix) * q.adjoint();

  check_agreement(direct, via_factors, "joint_h_operator");
  return direct;
}

}  // namespace renyi2

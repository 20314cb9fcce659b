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

#ifndef RENYI2_CHANNEL_HPP
#define RENYI2_CHANNEL_HPP

#include <functional>
#include <vector>

#include "renyi2/matrix_ops.hpp"

namespace renyi2 {

// Trace-preservation tolerance: ||sum_a v_a^dag v_a - I||_max <= kTraceTol.
inline constexpr double kTraceTol = 1e-8;

// Kraus extraction drops Choi eigenvalues below kKrausCutoff * trace.
inline constexpr double kKrausCutoff = 1e-10;

/// Kraus family without the trace-preservation requirement (duals and other
/// completely positive maps live here).
struct KrausMap {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<CMat> kraus;  // each dim_out x dim_in

  /// sum_a v_a x v_a^dag. Throws std::invalid_argument on dimension mismatch.
  CMat apply(const CMat& x) const;
};

/// Completely positive trace-preserving map stored as a Kraus family.
/// Construction validates sum_a v_a^dag v_a = I within kTraceTol.
struct QuantumChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<CMat> kraus;  // each dim_out x dim_in

  static QuantumChannel from_kraus(std::vector<CMat> kraus);

  static QuantumChannel identity(int d);

  /// Kraus family {|i><j| / sqrt(d)}; sends every state to I/d.
  static QuantumChannel completely_depolarizing(int d);

  CMat apply(const CMat& rho) const;

  /// The adjoint map X -> sum_a v_a^dag X v_a with respect to the trace
  /// inner product: tr(L(rho) X) = tr(rho dual(X)). Unital, dimensions swap.
  KrausMap dual() const;

  CMat apply_dual(const CMat& x) const;
};

/// Tensor product channel with Kraus family {v_a (x) w_c}.
QuantumChannel tensor_channel(const QuantumChannel& ch1, const QuantumChannel& ch2);

/// A general linear map on square matrices, stored by its action on the
/// matrix units E_ij. Represents maps that need not be completely positive
/// (transposition, channel-transpose compositions, parameterized families
/// outside their CP region).
class LinearMap {
 public:
  LinearMap(int dim_in, int dim_out, std::vector<CMat> unit_images);

  static LinearMap from_function(int dim_in,
                                 const std::function<CMat(const CMat&)>& fn);
  static LinearMap from_channel(const QuantumChannel& ch);

  /// The transposition map X -> X^T on dimension d.
  static LinearMap transposition(int d);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }

  /// Image of the matrix unit E_ij.
  const CMat& unit_image(int i, int j) const;

  /// Linear extension: M(x) = sum_ij x_ij M(E_ij).
  CMat apply(const CMat& x) const;

  /// The composition M o T, i.e. x -> M(x^T).
  LinearMap compose_transpose() const;

 private:
  int dim_in_;
  int dim_out_;
  std::vector<CMat> unit_images_;  // index i*dim_in + j holds M(E_ij)
};

/// Composition ch o T as an abstract map (not completely positive in
/// general), kept in matrix-unit form for Choi construction.
LinearMap compose_with_transpose(const QuantumChannel& ch);

/// Choi matrix sum_ij E_ij (x) M(E_ij), unnormalized convention: the input
/// factor comes first and the trace equals dim_in for trace-preserving maps.
struct ChoiMatrix {
  int dim_in = 0;
  int dim_out = 0;
  CMat matrix;  // (dim_in*dim_out) x (dim_in*dim_out)
};

ChoiMatrix choi_of(const QuantumChannel& ch);
ChoiMatrix choi_of(const LinearMap& map);

/// Kraus decomposition from the spectral form of a PSD Choi matrix,
/// dropping eigenvalues below kKrausCutoff * trace. Throws
/// std::invalid_argument when the Choi has an eigenvalue below the
/// positivity threshold (the map is not completely positive) or when the
/// resulting family is not trace preserving.
QuantumChannel choi_to_kraus(const ChoiMatrix& choi);

bool is_completely_positive(const LinearMap& map);

/// True iff ch o T is completely positive, equivalently the partial
/// transpose of the Choi matrix on the input factor is PSD. Well defined
/// for dim_in != dim_out as well.
bool is_ppt_inducing(const QuantumChannel& ch);

/// Smallest eigenvalue of the partial transpose of the Choi matrix
/// (the quantity behind is_ppt_inducing, exposed for reports).
double ppt_min_eigenvalue(const QuantumChannel& ch);

}  // namespace renyi2

#endif  // RENYI2_CHANNEL_HPP

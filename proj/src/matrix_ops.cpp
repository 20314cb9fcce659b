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

#include "renyi2/matrix_ops.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace renyi2 {

double max_abs(const CMat& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMat& m) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= kHermitianTol * scale;
}

CMat tensor(const CMat& a, const CMat& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  CMat out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

CMat flip_operator(int d) {
  if (d < 1) throw std::invalid_argument("flip_operator: d must be >= 1");
  CMat f = CMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

CMat max_entangled_projector(int d, bool normalized) {
  if (d < 1) throw std::invalid_argument("max_entangled_projector: d must be >= 1");
  CVec v = CVec::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
  CMat p = v * v.adjoint();
  if (normalized) p /= static_cast<double>(d);
  return p;
}

namespace {

void check_bipartite_dims(const CMat& m, int dim_a, int dim_b, const char* op) {
  if (dim_a < 1 || dim_b < 1 ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b ||
      m.cols() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw std::invalid_argument(std::string(op) + ": matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) +
                                ", expected square of size " +
                                std::to_string(dim_a) + "*" +
                                std::to_string(dim_b));
  }
}

}  // namespace

CMat partial_transpose(const CMat& m, int dim_a, int dim_b, Subsystem which) {
  check_bipartite_dims(m, dim_a, dim_b, "partial_transpose");
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < dim_a; ++i)
    for (int k = 0; k < dim_b; ++k)
      for (int j = 0; j < dim_a; ++j)
        for (int l = 0; l < dim_b; ++l) {
          // (i,k),(j,l) -> (j,k),(i,l) for the first factor,
          //                (i,l),(j,k) for the second.
          if (which == Subsystem::First)
            out(j * dim_b + k, i * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
          else
            out(i * dim_b + l, j * dim_b + k) = m(i * dim_b + k, j * dim_b + l);
        }
  return out;
}

CMat partial_trace(const CMat& m, int dim_a, int dim_b, Subsystem traced) {
  check_bipartite_dims(m, dim_a, dim_b, "partial_trace");
  if (traced == Subsystem::Second) {
    CMat out = CMat::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
  }
  CMat out = CMat::Zero(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k)
    for (int l = 0; l < dim_b; ++l)
      for (int i = 0; i < dim_a; ++i) out(k, l) += m(i * dim_b + k, i * dim_b + l);
  return out;
}

CMat permute_tensor_factors(const std::vector<int>& dims,
                            const std::vector<int>& perm) {
  if (dims.size() != perm.size())
    throw std::invalid_argument("permute_tensor_factors: dims/perm size mismatch");
  const int n = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("permute_tensor_factors: bad dimension");
    total *= d;
  }
  std::vector<int> permuted_dims(n);
  for (int i = 0; i < n; ++i) permuted_dims[i] = dims[perm[i]];

  CMat q = CMat::Zero(total, total);
  std::vector<int> idx(n);
  for (long col = 0; col < total; ++col) {
    long c = col;
    for (int i = n - 1; i >= 0; --i) {
      idx[i] = static_cast<int>(c % dims[i]);
      c /= dims[i];
    }
    long row = 0;
    for (int i = 0; i < n; ++i) row = row * permuted_dims[i] + idx[perm[i]];
    q(row, col) = 1.0;
  }
  return q;
}

HermitianSpectrum hermitian_eig(const CMat& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<CMat> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  return HermitianSpectrum{solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMat& m) {
  return hermitian_eig(m).eigenvalues(0);
}

bool is_psd(const CMat& m) {
  return min_eigenvalue(m) >= -kPositivityTol * std::max(1.0, max_abs(m));
}

std::vector<double> singular_values(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

}  // namespace renyi2

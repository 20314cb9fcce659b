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

#ifndef RENYI2_MATRIX_OPS_HPP
#define RENYI2_MATRIX_OPS_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace renyi2 {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Composite index convention, used by every tensor-structured object in this
// library: the index pair (i, k) with i on the first factor (dimension dA)
// and k on the second factor (dimension dB) maps to the flat index i*dB + k.
// tensor(), flip_operator(), partial_transpose(), Choi matrices and the
// replica operators all share this layout.

// Relative tolerance for Hermiticity checks: a matrix M is accepted as
// Hermitian when max|M - M^dag| <= kHermitianTol * max(1, max|M|).
inline constexpr double kHermitianTol = 1e-9;

// Positivity threshold: M >= 0 is accepted when
// min_eigenvalue(M) >= -kPositivityTol * max(1, max|M|).
inline constexpr double kPositivityTol = 1e-9;

/// Largest entrywise absolute value, max_ij |M_ij|.
double max_abs(const CMat& m);

/// True when max|M - M^dag| <= kHermitianTol * max(1, max|M|).
bool is_hermitian(const CMat& m);

/// Kronecker product with the (i, k) -> i*dB + k index convention:
/// (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l].
CMat tensor(const CMat& a, const CMat& b);

/// The d^2 x d^2 swap operator F with F (x (x) y) = y (x) x.
/// Hermitian, F^2 = identity; eigenvalue +1 on the symmetric subspace
/// (dimension d(d+1)/2) and -1 on the antisymmetric one (dimension d(d-1)/2).
CMat flip_operator(int d);

/// The projector-like matrix sum_ij |e_i e_i><e_j e_j|. Unnormalized it has
/// trace d; with normalized=true it is divided by d (a rank-1 projector).
CMat max_entangled_projector(int d, bool normalized = false);

enum class Subsystem { First, Second };

/// Transposes the chosen tensor factor of a (dA*dB) x (dA*dB) matrix.
/// Involutive, linear, trace- and Hermiticity-preserving.
/// Throws std::invalid_argument on dimension mismatch.
CMat partial_transpose(const CMat& m, int dim_a, int dim_b, Subsystem which);

/// Partial trace over one factor of a (dA*dB) x (dA*dB) matrix.
CMat partial_trace(const CMat& m, int dim_a, int dim_b, Subsystem traced);

/// Permutation matrix Q reordering the factors of a tensor-product space:
/// Q |x_0 (x) ... (x) x_{n-1}> = |x_{perm[0]} (x) ... (x) x_{perm[n-1]}>.
/// dims[i] is the dimension of source factor i. Conjugation Q M Q^dag turns
/// an operator laid out in source order into the permuted factor order.
CMat permute_tensor_factors(const std::vector<int>& dims,
                            const std::vector<int>& perm);

/// Full spectrum of a Hermitian matrix.
struct HermitianSpectrum {
  Eigen::VectorXd eigenvalues;  // sorted ascending
  CMat eigenvectors;            // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Throws std::invalid_argument
/// when the input fails the Hermiticity tolerance. The reconstruction
/// residual ||M - V diag(w) V^dag||_max is below 1e-10 * max(1, max|M|).
HermitianSpectrum hermitian_eig(const CMat& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMat& m);

/// True when min_eigenvalue(m) >= -kPositivityTol * max(1, max|m|).
bool is_psd(const CMat& m);

/// Singular values in nonincreasing order; min(rows, cols) of them.
std::vector<double> singular_values(const CMat& m);

}  // namespace renyi2

#endif  // RENYI2_MATRIX_OPS_HPP

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

#ifndef RENYI2_RANDOM_HPP
#define RENYI2_RANDOM_HPP

#include <cstdint>
#include <random>

#include "renyi2/matrix_ops.hpp"

namespace renyi2 {

struct QuantumChannel;

// Seeded random source. Gaussian variates are produced by an explicit
// Box-Muller transform on top of mt19937_64 so that streams do not depend
// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal variate.
  double gaussian();

  /// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
  Complex complex_gaussian();

  /// Matrix of independent standard complex Gaussians.
  CMat ginibre(int rows, int cols);

  /// Derives an independent child stream; child streams for distinct indices
  /// are decorrelated from each other and from the parent.
  Rng split(std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

/// Haar-random unit vector (normalized standard complex Gaussian).
CVec haar_state(int d, Rng& rng);

/// Random full-rank density matrix (normalized Wishart).
CMat random_density(int d, Rng& rng);

/// Random Hermitian matrix with entries of unit scale.
CMat random_hermitian(int d, Rng& rng);

/// Random channel with `kraus_count` Kraus operators (Ginibre family,
/// renormalized to be exactly trace preserving).
QuantumChannel random_channel(int dim_in, int dim_out, int kraus_count, Rng& rng);

/// Random PPT-inducing channel on dimension d: a random Choi matrix is
/// alternately projected onto the PSD and PSD-partial-transpose cones, pushed
/// strictly inside by blending with the identity, and renormalized to be
/// trace preserving (an operation that preserves both cones).
QuantumChannel random_ppt_inducing_channel(int d, Rng& rng);

}  // namespace renyi2

#endif  // RENYI2_RANDOM_HPP

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

#ifndef RENYI2_OPTIMIZE_HPP
#define RENYI2_OPTIMIZE_HPP

#include <cstdint>
#include <vector>

#include "renyi2/channel.hpp"
#include "renyi2/matrix_ops.hpp"

namespace renyi2 {

// Two joint uses of channels are declared additive when the maximal joint
// output purity exceeds the product of the individual maxima by no more
// than this.
inline constexpr double kAdditivityTol = 1e-6;

enum class LogBase { Natural, Two };

/// Order-p Renyi entropy (1/(1-p)) log tr rho^p of a density matrix,
/// computed through the eigenvalues. Requires p > 0, p != 1, rho PSD within
/// threshold and unit trace to 1e-8; throws std::invalid_argument otherwise.
double renyi_entropy(const CMat& rho, double p, LogBase base = LogBase::Natural);

struct OptimizeOptions {
  int restarts = 32;
  double tol = 1e-10;     // stop when the purity gain per iteration drops below
  int max_iterations = 1000;
  std::uint64_t seed = 0;
};

struct OptimizationResult {
  double max_purity = 0.0;
  CVec argmax_state;       // unit vector
  double min_h2 = 0.0;     // -log(max_purity), natural log
  int restarts_used = 0;
  bool converged = false;
  int best_trace = 0;      // iterations used by the best restart
};

/// Maximal output purity max_phi tr L(|phi><phi|)^2 over unit vectors by
/// multi-start ascent: each start repeatedly replaces phi with the top
/// eigenvector of dual(L(|phi><phi|)) applied through the channel, which is
/// the conditional-gradient step for this convex objective and never
/// decreases the purity. Ties in the leading eigenvalue are broken toward
/// the current iterate, which keeps runs reproducible for a fixed seed.
/// `warm_starts` vectors are used before random Haar starts.
OptimizationResult max_output_purity(const QuantumChannel& ch,
                                     const OptimizeOptions& opts = {},
                                     const std::vector<CVec>& warm_starts = {});

/// The same ascent applied to ch1 (x) ch2, with phi ranging over the joint
/// (entanglement-capable) unit sphere of dimension dim_in1 * dim_in2.
OptimizationResult joint_max_purity(const QuantumChannel& ch1,
                                    const QuantumChannel& ch2,
                                    const OptimizeOptions& opts = {},
                                    const std::vector<CVec>& warm_starts = {});

struct AdditivityReport {
  OptimizationResult single1;
  OptimizationResult single2;
  OptimizationResult joint;
  double joint_max_purity = 0.0;
  double product_of_maxima = 0.0;
  double gap = 0.0;          // joint - product
  bool additive = false;     // gap <= kAdditivityTol
};

/// Maximizes the two channels separately and jointly and reports the purity
/// gap. One joint restart is seeded with the product of the individual
/// optimizers' states, so joint >= product holds up to solver tolerance.
AdditivityReport additivity_gap(const QuantumChannel& ch1,
                                const QuantumChannel& ch2,
                                const OptimizeOptions& opts = {});

/// Lower-bound oracle: the best purity over `samples` Haar-random unit
/// vectors, each refined by a few power-iteration steps. Independent of the
/// bookkeeping in max_output_purity.
double brute_force_max_purity(const QuantumChannel& ch, int samples,
                              std::uint64_t seed = 0);

}  // namespace renyi2

#endif  // RENYI2_OPTIMIZE_HPP

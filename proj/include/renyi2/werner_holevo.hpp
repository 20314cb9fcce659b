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

#ifndef RENYI2_WERNER_HOLEVO_HPP
#define RENYI2_WERNER_HOLEVO_HPP

#include <optional>
#include <utility>
#include <vector>

#include "renyi2/channel.hpp"
#include "renyi2/matrix_ops.hpp"
#include "renyi2/replica.hpp"

namespace renyi2 {

// The generalized Werner-Holevo family on dimension d,
//
//   L(rho) = a rho + b rho^T + (1 - a - b) tr(rho) I/d.
//
// Points outside the completely positive region are representable on
// purpose; the family is evaluated by the exact linear formula and Kraus
// forms are derived on demand.

// Grid points closer than this to one of the six region boundary lines are
// flagged instead of classified.
inline constexpr double kRegionBoundaryBand = 1e-7;

struct WHParams {
  double a = 0.0;
  double b = 0.0;
  int d = 2;
};

/// a rho + b rho^T + (1-a-b) tr(rho) I/d, exactly.
CMat wh_apply(const WHParams& p, const CMat& rho);

/// The family member as an abstract linear map (valid at any parameters).
LinearMap wh_map(const WHParams& p);

/// Choi matrix from the matrix-unit images of wh_apply.
ChoiMatrix wh_choi(const WHParams& p);

/// Kraus form via the spectral decomposition of the Choi matrix.
/// Throws std::invalid_argument outside the completely positive region.
QuantumChannel wh_channel(const WHParams& p);

/// Complete positivity by the three closed-form inequalities
///   a(d^2-1) + b(d-1) + 1 >= 0,  b(d-1) - a + 1 >= 0,  b(d+1) + a - 1 <= 0.
bool wh_is_cp(const WHParams& p);

/// PPT-inducing region: the complete-positivity inequalities together with
/// their a <-> b mirror images.
bool wh_is_ppt(const WHParams& p);

/// Maximal output purity in closed form, valid on the CP region:
///   (1 + (d-1)(a+b)^2) / d                 for ab >= 0,
///   (d(a^2+b^2) - (a+b)^2 + 1) / d         for ab <= 0.
/// The two branches agree where ab = 0. Throws std::invalid_argument for
/// non-CP parameters.
double wh_max_purity(const WHParams& p);

struct RegionClassification {
  bool is_cp = false;
  bool is_ppt_inducing = false;
  // -h positivity conditions; empty when the point is not a channel.
  std::optional<bool> cond_h;
  std::optional<bool> cond_hF;
};

struct RegionRow {
  double a = 0.0;
  double b = 0.0;
  RegionClassification cls;
  bool boundary = false;  // within kRegionBoundaryBand of a region line
};

struct RegionOptions {
  double a_min = -1.05;
  double a_max = 1.05;
  double b_min = -1.05;
  double b_max = 1.05;
  double step = 0.05;
  int threads = 0;  // 0: hardware concurrency
};

/// Classifies every grid point: CP and PPT by the closed-form inequalities,
/// the two -h positivity conditions through the Kraus form where the point
/// is a channel. Grid points are independent and processed in parallel;
/// rows come back in row-major (a, then b) order.
std::vector<RegionRow> region_scan(int d, const RegionOptions& opts = {});

/// The four corners of the PPT-inducing parameter polytope, found by exact
/// pairwise intersection of the six boundary lines filtered by feasibility.
/// Throws std::runtime_error when the count differs from four.
std::vector<std::pair<double, double>> ppt_polytope_vertices(int d);

/// The vertex (-2/(d^2+d-2), d/(d^2+d-2)) whose Choi matrix is PPT yet
/// not separable.
WHParams extremal_params(int d);

enum class ClosedFormMatch { Normalized, Unnormalized, Both, Neither };

struct ExtremalChoiResult {
  WHParams params;
  ChoiMatrix choi;               // direct matrix-unit construction
  double trace = 0.0;            // equals d for a trace-preserving map
  double min_eigenvalue = 0.0;
  double pt_min_eigenvalue = 0.0;
  // Residuals against (2d/(d^2+d-2)) ((I+F)/2 - projector) with the
  // maximally entangled projector read as trace-1 or trace-d.
  double diff_normalized = 0.0;
  double diff_unnormalized = 0.0;
  ClosedFormMatch match = ClosedFormMatch::Neither;
};

/// Builds the extremal Choi matrix directly from wh_apply and compares it
/// against the closed form under both projector normalizations.
ExtremalChoiResult extremal_choi(int d);

/// Realignment of a bipartite matrix: R[(i,j),(k,l)] = M[(i,k),(j,l)].
CMat realignment(const CMat& m, int dim_a, int dim_b);

struct RealignmentResult {
  bool detected = false;
  double realignment_sum = 0.0;  // singular values of the realigned matrix
};

/// Computable entanglement witness: rescales the Choi matrix to unit trace
/// and sums the singular values of its realignment. A sum above 1 proves
/// entanglement; a sum at or below 1 proves nothing.
RealignmentResult realignment_entanglement_check(const ChoiMatrix& choi);

}  // namespace renyi2

#endif  // RENYI2_WERNER_HOLEVO_HPP

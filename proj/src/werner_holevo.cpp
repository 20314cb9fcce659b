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

#include "renyi2/werner_holevo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace renyi2 {

namespace {

void check_dim(const WHParams& p) {
  if (p.d < 2) throw std::invalid_argument("werner-holevo: d must be >= 2");
  if (!std::isfinite(p.a) || !std::isfinite(p.b))
    throw std::invalid_argument("werner-holevo: parameters must be finite");
}

// The six boundary lines as affine forms g(a,b) >= 0. The first three cut
// out the completely positive triangle; the last three are their a <-> b
// mirrors and, jointly, the PPT-inducing quadrangle.
std::array<double, 6> region_forms(double a, double b, int d) {
  return {
      a * (d * d - 1.0) + b * (d - 1.0) + 1.0,
      b * (d - 1.0) - a + 1.0,
      1.0 - a - b * (d + 1.0),
      b * (d * d - 1.0) + a * (d - 1.0) + 1.0,
      a * (d - 1.0) - b + 1.0,
      1.0 - b - a * (d + 1.0),
  };
}

}  // namespace

CMat wh_apply(const WHParams& p, const CMat& rho) {
  check_dim(p);
  if (rho.rows() != p.d || rho.cols() != p.d)
    throw std::invalid_argument("wh_apply: state dimension mismatch");
  return p.a * rho + p.b * rho.transpose() +
         ((1.0 - p.a - p.b) / p.d) * rho.trace() * CMat::Identity(p.d, p.d);
}

LinearMap wh_map(const WHParams& p) {
  check_dim(p);
  return LinearMap::from_function(p.d, [&](const CMat& x) { return wh_apply(p, x); });
}

ChoiMatrix wh_choi(const WHParams& p) { return choi_of(wh_map(p)); }

QuantumChannel wh_channel(const WHParams& p) {
  if (!wh_is_cp(p))
    throw std::invalid_argument("wh_channel: parameters are not completely positive");
  return choi_to_kraus(wh_choi(p));
}

bool wh_is_cp(const WHParams& p) {
  check_dim(p);
  const auto g = region_forms(p.a, p.b, p.d);
  return g[0] >= 0.0 && g[1] >= 0.0 && g[2] >= 0.0;
}

bool wh_is_ppt(const WHParams& p) {
  check_dim(p);
  const auto g = region_forms(p.a, p.b, p.d);
  return std::all_of(g.begin(), g.end(), [](double v) { return v >= 0.0; });
}

double wh_max_purity(const WHParams& p) {
  if (!wh_is_cp(p))
    throw std::invalid_argument("wh_max_purity: parameters are not completely positive");
  const double s = p.a + p.b;
  if (p.a * p.b >= 0.0) return (1.0 + (p.d - 1.0) * s * s) / p.d;
  return (p.d * (p.a * p.a + p.b * p.b) - s * s + 1.0) / p.d;
}

std::vector<RegionRow> region_scan(int d, const RegionOptions& opts) {
  if (d < 2) throw std::invalid_argument("region_scan: d must be >= 2");
  if (!(opts.step > 0.0)) throw std::invalid_argument("region_scan: step must be positive");

  std::vector<std::pair<double, double>> grid;
  for (int i = 0;; ++i) {
    const double a = opts.a_min + i * opts.step;
    if (a > opts.a_max + opts.step * 0.5) break;
    for (int j = 0;; ++j) {
      const double b = opts.b_min + j * opts.step;
      if (b > opts.b_max + opts.step * 0.5) break;
      grid.emplace_back(a, b);
    }
  }

  std::vector<RegionRow> rows(grid.size());
  const auto classify = [&](size_t k) {
    const auto [a, b] = grid[k];
    RegionRow row;
    row.a = a;
    row.b = b;
    const auto g = region_forms(a, b, d);
    row.boundary = std::any_of(g.begin(), g.end(), [](double v) {
      return std::abs(v) <= kRegionBoundaryBand;
    });
    const WHParams p{a, b, d};
    row.cls.is_cp = wh_is_cp(p);
    row.cls.is_ppt_inducing = wh_is_ppt(p);
    if (row.cls.is_cp) {
      try {
        const PositivityConditions c = positivity_conditions(wh_channel(p));
        row.cls.cond_h = c.h_positive;
        row.cls.cond_hF = c.hF_positive;
      } catch (const std::invalid_argument&) {
        // Inequalities said CP but the spectral extraction refused: the
        // point sits on the region boundary within rounding.
        row.boundary = true;
      }
    }
    rows[k] = std::move(row);
  };

  int threads = opts.threads > 0
                    ? opts.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
  if (threads == 1) {
    for (size_t k = 0; k < grid.size(); ++k) classify(k);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t k = next.fetch_add(1); k < grid.size(); k = next.fetch_add(1))
          classify(k);
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::vector<std::pair<double, double>> ppt_polytope_vertices(int d) {
  if (d < 2) throw std::invalid_argument("ppt_polytope_vertices: d must be >= 2");
  // Lines g_i(a, b) = c_a a + c_b b + c = 0 matching region_forms.
  struct Line {
    double ca, cb, c;
  };
  const std::array<Line, 6> lines = {{
      {d * d - 1.0, d - 1.0, 1.0},
      {-1.0, d - 1.0, 1.0},
      {-1.0, -(d + 1.0), 1.0},
      {d - 1.0, d * d - 1.0, 1.0},
      {d - 1.0, -1.0, 1.0},
      {-(d + 1.0), -1.0, 1.0},
  }};

  constexpr double kFeasibleSlack = 1e-9;
  std::vector<std::pair<double, double>> vertices;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i].ca * lines[j].cb - lines[j].ca * lines[i].cb;
      if (std::abs(det) < 1e-12 * (std::abs(lines[i].ca * lines[j].cb) +
                                   std::abs(lines[j].ca * lines[i].cb) + 1.0))
        continue;  // parallel
      const double a = (-lines[i].c * lines[j].cb + lines[j].c * lines[i].cb) / det;
      const double b = (-lines[j].c * lines[i].ca + lines[i].c * lines[j].ca) / det;
      const auto g = region_forms(a, b, d);
      if (!std::all_of(g.begin(), g.end(),
                       [&](double v) { return v >= -kFeasibleSlack; }))
        continue;
      const bool dup = std::any_of(vertices.begin(), vertices.end(), [&](auto& v) {
        return std::abs(v.first - a) < 1e-9 && std::abs(v.second - b) < 1e-9;
      });
      if (!dup) vertices.emplace_back(a, b);
    }

  if (vertices.size() != 4)
    throw std::runtime_error("ppt_polytope_vertices: expected 4 vertices, found " +
                             std::to_string(vertices.size()));
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

WHParams extremal_params(int d) {
  if (d < 2) throw std::invalid_argument("extremal_params: d must be >= 2");
  const double denom = static_cast<double>(d) * d + d - 2.0;
  return WHParams{-2.0 / denom, d / denom, d};
}

ExtremalChoiResult extremal_choi(int d) {
  ExtremalChoiResult out;
  out.params = extremal_params(d);
  out.choi = wh_choi(out.params);
  out.trace = out.choi.matrix.trace().real();
  out.min_eigenvalue = min_eigenvalue(out.choi.matrix);
  out.pt_min_eigenvalue = min_eigenvalue(
      partial_transpose(out.choi.matrix, d, d, Subsystem::First));

  const double denom = static_cast<double>(d) * d + d - 2.0;
  const CMat base = 0.5 * (CMat::Identity(d * d, d * d) + flip_operator(d));
  const CMat closed_normalized =
      (2.0 * d / denom) * (base - max_entangled_projector(d, /*normalized=*/true));
  const CMat closed_unnormalized =
      (2.0 * d / denom) * (base - max_entangled_projector(d, /*normalized=*/false));
  out.diff_normalized = max_abs(out.choi.matrix - closed_normalized);
  out.diff_unnormalized = max_abs(out.choi.matrix - closed_unnormalized);

  constexpr double tol = 1e-10;
  const bool norm_ok = out.diff_normalized <= tol;
  const bool unnorm_ok = out.diff_unnormalized <= tol;
  if (norm_ok && unnorm_ok)
    out.match = ClosedFormMatch::Both;
  else if (norm_ok)
    out.match = ClosedFormMatch::Normalized;
  else if (unnorm_ok)
    out.match = ClosedFormMatch::Unnormalized;
  else
    out.match = ClosedFormMatch::Neither;
  return out;
}

CMat realignment(const CMat& m, int dim_a, int dim_b) {
  if (m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b ||
      m.cols() != static_cast<Eigen::Index>(dim_a) * dim_b)
    throw std::invalid_argument("realignment: dimension mismatch");
  CMat r(static_cast<Eigen::Index>(dim_a) * dim_a,
         static_cast<Eigen::Index>(dim_b) * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          r(i * dim_a + j, k * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
  return r;
}

RealignmentResult realignment_entanglement_check(const ChoiMatrix& choi) {
  const double trace = choi.matrix.trace().real();
  if (!(trace > 0.0))
    throw std::invalid_argument("realignment_entanglement_check: trace must be positive");
  const CMat normalized = choi.matrix / trace;
  const auto sv = singular_values(realignment(normalized, choi.dim_in, choi.dim_out));
  RealignmentResult out;
  out.realignment_sum = std::accumulate(sv.begin(), sv.end(), 0.0);
  out.detected = out.realignment_sum > 1.0 + 1e-9;
  return out;
}

}  // namespace renyi2

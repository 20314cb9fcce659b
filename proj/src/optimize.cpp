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

#include "renyi2/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "renyi2/random.hpp"

namespace renyi2 {

namespace {

constexpr double kMonotoneSlack = 1e-12;
constexpr double kDegeneracyBand = 1e-12;

double output_purity(const QuantumChannel& ch, const CVec& phi) {
  const CMat out = ch.apply(phi * phi.adjoint());
  return (out * out).trace().real();
}

// Top eigenvector with degenerate leading eigenvalues resolved toward the
// current iterate: project the iterate onto the near-maximal eigenspace.
CVec top_eigenvector_aligned(const HermitianSpectrum& spec, const CVec& current) {
  const Eigen::Index n = spec.eigenvalues.size();
  const double top = spec.eigenvalues(n - 1);
  const double band = kDegeneracyBand * std::max(1.0, std::abs(top));
  Eigen::Index first = n - 1;
  while (first > 0 && spec.eigenvalues(first - 1) >= top - band) --first;

  CVec projected = CVec::Zero(current.size());
  for (Eigen::Index k = first; k < n; ++k) {
    const CVec col = spec.eigenvectors.col(k);
    projected += col.dot(current) * col;
  }
  const double norm = projected.norm();
  if (norm > 1e-8) return projected / norm;
  return spec.eigenvectors.col(n - 1);
}

struct AscentOutcome {
  double purity = 0.0;
  CVec state;
  int iterations = 0;
  bool converged = false;
};

AscentOutcome ascend(const QuantumChannel& ch, CVec phi, double tol,
                     int max_iterations) {
  AscentOutcome out;
  double prev = output_purity(ch, phi);
  out.purity = prev;
  out.state = phi;
  for (int it = 1; it <= max_iterations; ++it) {
    CMat g = ch.apply_dual(ch.apply(phi * phi.adjoint()));
    g = 0.5 * (g + g.adjoint());
    phi = top_eigenvector_aligned(hermitian_eig(g), phi);
    const double purity = output_purity(ch, phi);
    if (purity < prev - kMonotoneSlack)
      throw std::runtime_error("max_output_purity: ascent regressed by " +
                               std::to_string(prev - purity));
    out.purity = purity;
    out.state = phi;
    out.iterations = it;
    if (purity - prev < tol) {
      out.converged = true;
      break;
    }
    prev = purity;
  }
  return out;
}

OptimizationResult multistart(const QuantumChannel& ch, const OptimizeOptions& opts,
                              const std::vector<CVec>& warm_starts) {
  if (opts.restarts < 1)
    throw std::invalid_argument("max_output_purity: restarts must be >= 1");
  if (opts.tol <= 0.0)
    throw std::invalid_argument("max_output_purity: tol must be positive");

  Rng master(opts.seed);
  OptimizationResult best;
  best.max_purity = -1.0;
  for (int s = 0; s < opts.restarts; ++s) {
    CVec start;
    if (s < static_cast<int>(warm_starts.size())) {
      start = warm_starts[s].normalized();
    } else {
      Rng stream = master.split(static_cast<std::uint64_t>(s));
      start = haar_state(ch.dim_in, stream);
    }
    const AscentOutcome run = ascend(ch, start, opts.tol, opts.max_iterations);
    if (run.purity > best.max_purity) {
      best.max_purity = run.purity;
      best.argmax_state = run.state;
      best.converged = run.converged;
      best.best_trace = run.iterations;
    }
  }
  best.restarts_used = opts.restarts;
  best.min_h2 = -std::log(best.max_purity);

  // Fix the global phase (largest-magnitude entry made real nonnegative) so
  // reports do not depend on eigensolver phase conventions.
  Eigen::Index imax;
  best.argmax_state.cwiseAbs().maxCoeff(&imax);
  const Complex z = best.argmax_state(imax);
  if (std::abs(z) > 0) best.argmax_state *= std::conj(z) / std::abs(z);
  return best;
}

}  // namespace

double renyi_entropy(const CMat& rho, double p, LogBase base) {
  if (!(p > 0.0) || p == 1.0)
    throw std::invalid_argument("renyi_entropy: order must be positive and != 1");
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("renyi_entropy: matrix is not square");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
    throw std::invalid_argument("renyi_entropy: trace is not 1");
  const HermitianSpectrum spec = hermitian_eig(rho);
  const double scale = std::max(1.0, max_abs(rho));
  if (spec.eigenvalues(0) < -kPositivityTol * scale)
    throw std::invalid_argument("renyi_entropy: matrix is not positive semidefinite");

  double trace_p = 0.0;
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    const double lambda = std::max(spec.eigenvalues(i), 0.0);
    if (lambda > 0.0) trace_p += std::pow(lambda, p);
  }
  double value = std::log(trace_p) / (1.0 - p);
  if (base == LogBase::Two) value /= std::log(2.0);
  return value;
}

OptimizationResult max_output_purity(const QuantumChannel& ch,
                                     const OptimizeOptions& opts,
                                     const std::vector<CVec>& warm_starts) {
  return multistart(ch, opts, warm_starts);
}

OptimizationResult joint_max_purity(const QuantumChannel& ch1,
                                    const QuantumChannel& ch2,
                                    const OptimizeOptions& opts,
                                    const std::vector<CVec>& warm_starts) {
  return multistart(tensor_channel(ch1, ch2), opts, warm_starts);
}

AdditivityReport additivity_gap(const QuantumChannel& ch1,
                                const QuantumChannel& ch2,
                                const OptimizeOptions& opts) {
  AdditivityReport report;
  report.single1 = max_output_purity(ch1, opts);
  report.single2 = max_output_purity(ch2, opts);

  CVec product_state = CVec::Zero(static_cast<Eigen::Index>(ch1.dim_in) * ch2.dim_in);
  for (int i = 0; i < ch1.dim_in; ++i)
    for (int j = 0; j < ch2.dim_in; ++j)
      product_state(static_cast<Eigen::Index>(i) * ch2.dim_in + j) =
          report.single1.argmax_state(i) * report.single2.argmax_state(j);

  report.joint = joint_max_purity(ch1, ch2, opts, {product_state});
  report.joint_max_purity = report.joint.max_purity;
  report.product_of_maxima = report.single1.max_purity * report.single2.max_purity;
  report.gap = report.joint_max_purity - report.product_of_maxima;
  report.additive = report.gap <= kAdditivityTol;
  return report;
}

double brute_force_max_purity(const QuantumChannel& ch, int samples,
                              std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("brute_force_max_purity: samples must be >= 1");
  constexpr int kRefineSteps = 5;
  Rng rng(seed);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    CVec phi = haar_state(ch.dim_in, rng);
    best = std::max(best, output_purity(ch, phi));
    for (int step = 0; step < kRefineSteps; ++step) {
      CMat g = ch.apply_dual(ch.apply(phi * phi.adjoint()));
      g = 0.5 * (g + g.adjoint());
      Eigen::SelfAdjointEigenSolver<CMat> solver(g);
      phi = solver.eigenvectors().col(g.rows() - 1);
      best = std::max(best, output_purity(ch, phi));
    }
  }
  return best;
}

}  // namespace renyi2

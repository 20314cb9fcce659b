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

#include "renyi2/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "renyi2/channel.hpp"

namespace renyi2 {

double Rng::uniform() {
  // 53 random bits into [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  // Box-Muller; guard against log(0).
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

CMat Rng::ginibre(int rows, int cols) {
  CMat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = complex_gaussian();
  return g;
}

Rng Rng::split(std::uint64_t index) {
  // SplitMix64 mix of the parent stream and the child index.
  std::uint64_t z = engine_() ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

CVec haar_state(int d, Rng& rng) {
  CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
  return v / v.norm();
}

CMat random_density(int d, Rng& rng) {
  const CMat g = rng.ginibre(d, d);
  CMat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

CMat random_hermitian(int d, Rng& rng) {
  const CMat g = rng.ginibre(d, d);
  return 0.5 * (g + g.adjoint());
}

namespace {

// M^{-1/2} of a positive definite Hermitian matrix.
CMat inverse_sqrt(const CMat& m) {
  const HermitianSpectrum spec = hermitian_eig(m);
  if (spec.eigenvalues(0) <= 0.0)
    throw std::runtime_error("inverse_sqrt: matrix is not positive definite");
  Eigen::VectorXd w = spec.eigenvalues.cwiseSqrt().cwiseInverse();
  return spec.eigenvectors * w.asDiagonal() * spec.eigenvectors.adjoint();
}

CMat clip_to_psd(const CMat& m) {
  const HermitianSpectrum spec = hermitian_eig(0.5 * (m + m.adjoint()));
  Eigen::VectorXd w = spec.eigenvalues.cwiseMax(0.0);
  return spec.eigenvectors * w.asDiagonal() * spec.eigenvectors.adjoint();
}

}  // namespace

QuantumChannel random_channel(int dim_in, int dim_out, int kraus_count, Rng& rng) {
  if (kraus_count < 1) throw std::invalid_argument("random_channel: kraus_count >= 1");
  std::vector<CMat> kraus;
  kraus.reserve(kraus_count);
  for (int k = 0; k < kraus_count; ++k) kraus.push_back(rng.ginibre(dim_out, dim_in));
  CMat s = CMat::Zero(dim_in, dim_in);
  for (const CMat& v : kraus) s.noalias() += v.adjoint() * v;
  const CMat fix = inverse_sqrt(s);
  for (CMat& v : kraus) v = v * fix;
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel random_ppt_inducing_channel(int d, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const CMat g = rng.ginibre(d * d, d * d);
    CMat c = g * g.adjoint();

    bool inside = false;
    for (int iter = 0; iter < 400 && !inside; ++iter) {
      c = clip_to_psd(c);
      CMat pt = partial_transpose(c, d, d, Subsystem::First);
      pt = clip_to_psd(pt);
      c = partial_transpose(pt, d, d, Subsystem::First);
      inside = min_eigenvalue(0.5 * (c + c.adjoint())) > -1e-13 &&
               min_eigenvalue(pt) > -1e-13;
    }
    if (!inside) continue;

    // Blend with the identity (invariant under partial transpose) to move
    // strictly inside both cones, then renormalize to trace preservation;
    // conjugation by A (x) I preserves PSD and PSD-after-partial-transpose.
    c = clip_to_psd(c);
    c = (1.0 - 1e-6) * c +
        1e-6 * (c.trace().real() / (d * d)) * CMat::Identity(d * d, d * d);
    const CMat marginal = partial_trace(c, d, d, Subsystem::Second);
    const CMat fix = tensor(inverse_sqrt(marginal), CMat::Identity(d, d));
    c = fix * c * fix.adjoint();

    QuantumChannel ch = choi_to_kraus(ChoiMatrix{d, d, 0.5 * (c + c.adjoint())});
    if (is_ppt_inducing(ch)) return ch;
  }
  throw std::runtime_error("random_ppt_inducing_channel: sampling failed");
}

}  // namespace renyi2

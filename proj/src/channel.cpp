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

#include "renyi2/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace renyi2 {

namespace {

CMat apply_kraus(const std::vector<CMat>& kraus, const CMat& x, int dim_in,
                 int dim_out, bool adjoint_side) {
  const int in = adjoint_side ? dim_out : dim_in;
  const int out = adjoint_side ? dim_in : dim_out;
  if (x.rows() != in || x.cols() != in)
    throw std::invalid_argument("apply: operand is " + std::to_string(x.rows()) +
                                "x" + std::to_string(x.cols()) + ", expected " +
                                std::to_string(in) + "x" + std::to_string(in));
  CMat acc = CMat::Zero(out, out);
  for (const CMat& v : kraus) {
    if (adjoint_side)
      acc.noalias() += v.adjoint() * x * v;
    else
      acc.noalias() += v * x * v.adjoint();
  }
  return acc;
}

void validate_kraus_shapes(const std::vector<CMat>& kraus) {
  if (kraus.empty())
    throw std::invalid_argument("channel: at least one Kraus operator required");
  for (const CMat& v : kraus)
    if (v.rows() != kraus.front().rows() || v.cols() != kraus.front().cols())
      throw std::invalid_argument("channel: inconsistent Kraus operator shapes");
}

}  // namespace

CMat KrausMap::apply(const CMat& x) const {
  return apply_kraus(kraus, x, dim_in, dim_out, /*adjoint_side=*/false);
}

QuantumChannel QuantumChannel::from_kraus(std::vector<CMat> kraus) {
  validate_kraus_shapes(kraus);
  const int dim_out = static_cast<int>(kraus.front().rows());
  const int dim_in = static_cast<int>(kraus.front().cols());
  CMat sum = CMat::Zero(dim_in, dim_in);
  for (const CMat& v : kraus) sum.noalias() += v.adjoint() * v;
  const double defect = max_abs(sum - CMat::Identity(dim_in, dim_in));
  if (defect > kTraceTol)
    throw std::invalid_argument(
        "channel: Kraus family is not trace preserving (defect " +
        std::to_string(defect) + ")");
  return QuantumChannel{dim_in, dim_out, std::move(kraus)};
}

QuantumChannel QuantumChannel::identity(int d) {
  return QuantumChannel{d, d, {CMat::Identity(d, d)}};
}

QuantumChannel QuantumChannel::completely_depolarizing(int d) {
  std::vector<CMat> kraus;
  kraus.reserve(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CMat v = CMat::Zero(d, d);
      v(i, j) = s;
      kraus.push_back(std::move(v));
    }
  return QuantumChannel{d, d, std::move(kraus)};
}

CMat QuantumChannel::apply(const CMat& rho) const {
  return apply_kraus(kraus, rho, dim_in, dim_out, /*adjoint_side=*/false);
}

KrausMap QuantumChannel::dual() const {
  KrausMap m;
  m.dim_in = dim_out;
  m.dim_out = dim_in;
  m.kraus.reserve(kraus.size());
  for (const CMat& v : kraus) m.kraus.push_back(v.adjoint());
  return m;
}

CMat QuantumChannel::apply_dual(const CMat& x) const {
  return apply_kraus(kraus, x, dim_in, dim_out, /*adjoint_side=*/true);
}

QuantumChannel tensor_channel(const QuantumChannel& ch1, const QuantumChannel& ch2) {
  std::vector<CMat> kraus;
  kraus.reserve(ch1.kraus.size() * ch2.kraus.size());
  for (const CMat& v : ch1.kraus)
    for (const CMat& w : ch2.kraus) kraus.push_back(tensor(v, w));
  return QuantumChannel{ch1.dim_in * ch2.dim_in, ch1.dim_out * ch2.dim_out,
                        std::move(kraus)};
}

LinearMap::LinearMap(int dim_in, int dim_out, std::vector<CMat> unit_images)
    : dim_in_(dim_in), dim_out_(dim_out), unit_images_(std::move(unit_images)) {
  if (unit_images_.size() != static_cast<size_t>(dim_in_) * dim_in_)
    throw std::invalid_argument("LinearMap: expected dim_in^2 unit images");
  for (const CMat& img : unit_images_)
    if (img.rows() != dim_out_ || img.cols() != dim_out_)
      throw std::invalid_argument("LinearMap: unit image has wrong shape");
}

LinearMap LinearMap::from_function(int dim_in,
                                   const std::function<CMat(const CMat&)>& fn) {
  std::vector<CMat> images;
  images.reserve(dim_in * dim_in);
  int dim_out = -1;
  for (int i = 0; i < dim_in; ++i)
    for (int j = 0; j < dim_in; ++j) {
      CMat unit = CMat::Zero(dim_in, dim_in);
      unit(i, j) = 1.0;
      CMat img = fn(unit);
      if (dim_out < 0) dim_out = static_cast<int>(img.rows());
      images.push_back(std::move(img));
    }
  return LinearMap(dim_in, dim_out, std::move(images));
}

LinearMap LinearMap::from_channel(const QuantumChannel& ch) {
  return from_function(ch.dim_in, [&](const CMat& x) { return ch.apply(x); });
}

LinearMap LinearMap::transposition(int d) {
  return from_function(d, [](const CMat& x) { return x.transpose().eval(); });
}

const CMat& LinearMap::unit_image(int i, int j) const {
  return unit_images_[static_cast<size_t>(i) * dim_in_ + j];
}

CMat LinearMap::apply(const CMat& x) const {
  if (x.rows() != dim_in_ || x.cols() != dim_in_)
    throw std::invalid_argument("LinearMap::apply: dimension mismatch");
  CMat acc = CMat::Zero(dim_out_, dim_out_);
  for (int i = 0; i < dim_in_; ++i)
    for (int j = 0; j < dim_in_; ++j) acc += x(i, j) * unit_image(i, j);
  return acc;
}

LinearMap LinearMap::compose_transpose() const {
  // (M o T)(E_ij) = M(E_ji): reindex the stored images.
  std::vector<CMat> images;
  images.reserve(unit_images_.size());
  for (int i = 0; i < dim_in_; ++i)
    for (int j = 0; j < dim_in_; ++j) images.push_back(unit_image(j, i));
  return LinearMap(dim_in_, dim_out_, std::move(images));
}

LinearMap compose_with_transpose(const QuantumChannel& ch) {
  return LinearMap::from_channel(ch).compose_transpose();
}

namespace {

ChoiMatrix assemble_choi(int dim_in, int dim_out,
                         const std::function<const CMat&(int, int)>& image) {
  CMat c = CMat::Zero(static_cast<Eigen::Index>(dim_in) * dim_out,
                      static_cast<Eigen::Index>(dim_in) * dim_out);
  for (int i = 0; i < dim_in; ++i)
    for (int j = 0; j < dim_in; ++j)
      c.block(i * dim_out, j * dim_out, dim_out, dim_out) = image(i, j);
  return ChoiMatrix{dim_in, dim_out, std::move(c)};
}

}  // namespace

ChoiMatrix choi_of(const QuantumChannel& ch) {
  // sum_ij E_ij (x) L(E_ij), computed one block at a time: the (i,j) block
  // of the Choi matrix is L(E_ij).
  std::vector<CMat> images;
  images.reserve(static_cast<size_t>(ch.dim_in) * ch.dim_in);
  for (int i = 0; i < ch.dim_in; ++i)
    for (int j = 0; j < ch.dim_in; ++j) {
      CMat unit = CMat::Zero(ch.dim_in, ch.dim_in);
      unit(i, j) = 1.0;
      images.push_back(ch.apply(unit));
    }
  return assemble_choi(ch.dim_in, ch.dim_out, [&](int i, int j) -> const CMat& {
    return images[static_cast<size_t>(i) * ch.dim_in + j];
  });
}

ChoiMatrix choi_of(const LinearMap& map) {
  return assemble_choi(map.dim_in(), map.dim_out(),
                       [&](int i, int j) -> const CMat& { return map.unit_image(i, j); });
}

QuantumChannel choi_to_kraus(const ChoiMatrix& choi) {
  const HermitianSpectrum spec = hermitian_eig(choi.matrix);
  const double scale = std::max(1.0, max_abs(choi.matrix));
  if (spec.eigenvalues(0) < -kPositivityTol * scale)
    throw std::invalid_argument(
        "choi_to_kraus: Choi matrix has negative eigenvalue " +
        std::to_string(spec.eigenvalues(0)) + " (map is not completely positive)");
  const double trace = choi.matrix.trace().real();
  const double cutoff = kKrausCutoff * std::max(trace, 1e-300);

  std::vector<CMat> kraus;
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    const double lambda = spec.eigenvalues(k);
    if (lambda <= cutoff) continue;
    // Column u of the Choi eigenbasis folds into the Kraus operator
    // v[r, i] = sqrt(lambda) * u[i*dim_out + r].
    CMat v(choi.dim_out, choi.dim_in);
    const double s = std::sqrt(lambda);
    for (int i = 0; i < choi.dim_in; ++i)
      for (int r = 0; r < choi.dim_out; ++r)
        v(r, i) = s * spec.eigenvectors(i * choi.dim_out + r, k);
    kraus.push_back(std::move(v));
  }
  return QuantumChannel::from_kraus(std::move(kraus));
}

bool is_completely_positive(const LinearMap& map) {
  return is_psd(choi_of(map).matrix);
}

double ppt_min_eigenvalue(const QuantumChannel& ch) {
  const ChoiMatrix c = choi_of(ch);
  return min_eigenvalue(
      partial_transpose(c.matrix, c.dim_in, c.dim_out, Subsystem::First));
}

bool is_ppt_inducing(const QuantumChannel& ch) {
  const ChoiMatrix c = choi_of(ch);
  const CMat pt = partial_transpose(c.matrix, c.dim_in, c.dim_out, Subsystem::First);
  return min_eigenvalue(pt) >= -kPositivityTol * std::max(1.0, max_abs(pt));
}

}  // namespace renyi2

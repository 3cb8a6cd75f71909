// Copyright 2026 The paulispec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paulispec/lcu.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paulispec {
namespace lcu {

namespace {

int ancilla_count(size_t support) {
  int m = 0;
  while ((size_t{1} << m) < support) ++m;
  return m;
}

}  // namespace

LcuSpec LcuSpec::from_map(const PauliMap& coeffs, std::optional<double> gamma) {
  if (coeffs.entries.empty()) throw std::invalid_argument("LcuSpec: empty coefficient map");
  LcuSpec spec;
  spec.coeffs = coeffs;
  for (const auto& [idx, alpha] : coeffs.entries) {
    if (std::abs(alpha) == 0.0)
      throw std::invalid_argument("LcuSpec: zero-magnitude coefficient");
    spec.a += std::abs(alpha);
  }
  spec.m = ancilla_count(coeffs.entries.size());
  spec.gamma = gamma;
  return spec;
}

Mat build_prepare(const LcuSpec& spec) {
  const int64_t dim = int64_t{1} << spec.m;
  Eigen::VectorXd target = Eigen::VectorXd::Zero(dim);
  int64_t j = 0;
  for (const auto& [idx, alpha] : spec.coeffs.entries)
    target(j++) = std::sqrt(std::abs(alpha) / spec.a);
  Eigen::VectorXd v = target;
  v(0) -= 1.0;
  const double norm2 = v.squaredNorm();
  Mat a = Mat::Identity(dim, dim);
  if (norm2 > 1e-28)
    a -= (2.0 / norm2) * (v * v.transpose()).cast<cplx>();
  return a;
}

Mat build_select(const LcuSpec& spec) {
  const int n = spec.coeffs.n;
  const int64_t sub = int64_t{1} << n;
  const int64_t dim = (int64_t{1} << spec.m) * sub;
  Mat v = Mat::Zero(dim, dim);
  int64_t j = 0;
  for (const auto& [idx, alpha] : spec.coeffs.entries) {
    const cplx phase = alpha / std::abs(alpha);
    const Mat block = phase * PauliString::from_index(n, idx).matrix();
    v.block(j * sub, j * sub, sub, sub) = block;
    ++j;
  }
  for (int64_t rest = j; rest < (int64_t{1} << spec.m); ++rest)
    v.block(rest * sub, rest * sub, sub, sub) = Mat::Identity(sub, sub);
  return v;
}

Mat build_walk(const LcuSpec& spec) {
  const int n = spec.coeffs.n;
  const int64_t sub = int64_t{1} << n;
  const int64_t adim = int64_t{1} << spec.m;
  const Mat a = build_prepare(spec);
  const Mat v = build_select(spec);
  Mat a_big = Mat::Zero(adim * sub, adim * sub);
  for (int64_t r = 0; r < adim; ++r)
    for (int64_t c = 0; c < adim; ++c)
      a_big.block(r * sub, c * sub, sub, sub) =
          a(r, c) * Mat::Identity(sub, sub);
  return a_big.adjoint() * v * a_big;
}

Mat effective_block(const LcuSpec& spec) {
  const int64_t sub = int64_t{1} << spec.coeffs.n;
  return build_walk(spec).topLeftCorner(sub, sub);
}

Mat amplify(const LcuSpec& spec, int rounds) {
  if (rounds < 0) throw std::invalid_argument("amplify: negative round count");
  if (spec.gamma && (1.0 + *spec.gamma) / spec.a > 1.0 + 1e-12)
    throw std::invalid_argument("amplify: (1+gamma)/a must be <= 1");
  const int64_t sub = int64_t{1} << spec.coeffs.n;
  const int64_t dim = (int64_t{1} << spec.m) * sub;
  const Mat w = build_walk(spec);
  if (rounds == 0) return w;
  Mat r = Mat::Identity(dim, dim);
  r.topLeftCorner(sub, sub) -= 2.0 * Mat::Identity(sub, sub);
  const Mat g = -w * r * w.adjoint() * r;
  Mat out = w;
  for (int i = 0; i < rounds; ++i) out = g * out;
  return out;
}

int suggested_rounds(double a) {
  if (a <= 1.0) return 0;
  const double theta = std::asin(1.0 / a);
  const double raw = (std::numbers::pi / (2.0 * theta) - 1.0) / 2.0;
  return std::max(0, static_cast<int>(std::lround(raw)));
}

double success_probability(const LcuSpec& spec) {
  const Mat block = effective_block(spec);
  const int64_t sub = block.rows();
  return (block.adjoint() * block).trace().real() / static_cast<double>(sub);
}

}  // namespace lcu
}  // namespace paulispec

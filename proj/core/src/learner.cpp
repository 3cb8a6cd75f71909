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

#include "paulispec/learner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "paulispec/shadows.hpp"

namespace paulispec {
namespace learner {

void LearnConfig::validate() const {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("LearnConfig: theta must be in (0,1]");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("LearnConfig: epsilon must be in (0,1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("LearnConfig: delta must be in (0,1)");
  if (mode == Mode::Theorem && epsilon > theta * theta / 16.0 + 1e-15)
    throw std::invalid_argument("LearnConfig: theorem mode needs epsilon <= theta^2/16");
}

uint64_t LearnConfig::m1() const {
  const double inv = 1.0 / (theta * theta);
  return static_cast<uint64_t>(
      std::ceil(constants.c_m1 * (std::log(inv) + std::log(1.0 / delta)) * inv));
}

uint64_t LearnConfig::m2(uint64_t support_size) const {
  return shadows::shadow_sample_count(support_size, epsilon, delta, constants.shadow_c);
}

std::vector<uint64_t> find_support(const DenseOperator& u, const LearnConfig& cfg,
                                   RngStream& rng, QueryCounter& counter) {
  cfg.validate();
  const DenseState choi = choi_state(u);
  const uint64_t m1 = cfg.m1();
  RngStream stream = rng.substream(0);
  const std::vector<uint64_t> outcomes = bell_sample(choi, stream, m1);
  counter.add(m1);  // one Choi copy per Bell shot
  const std::set<uint64_t> distinct(outcomes.begin(), outcomes.end());
  return {distinct.begin(), distinct.end()};
}

CoefficientEstimate estimate_coefficients(const DenseOperator& u,
                                          const std::vector<uint64_t>& support,
                                          const LearnConfig& cfg, RngStream& rng,
                                          QueryCounter& counter, int workers) {
  if (support.empty())
    throw std::invalid_argument("estimate_coefficients: empty support");
  std::vector<uint64_t> x = support;
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());

  const DenseState choi = choi_state(u);
  CoefficientEstimate out;
  out.m2 = cfg.m2(x.size());

  // Round 1: magnitudes.
  std::vector<shadows::BellObservable> m_obs;
  m_obs.reserve(x.size());
  for (uint64_t s : x) m_obs.push_back(shadows::BellObservable::m(s));
  RngStream round1 = rng.substream(1);
  const std::vector<double> m_tilde =
      shadows::estimate_all(choi, m_obs, out.m2, cfg.delta, round1, &counter, workers);

  size_t best = 0;
  for (size_t i = 1; i < x.size(); ++i)
    if (m_tilde[i] > m_tilde[best]) best = i;  // ties keep the smallest index
  out.anchor_t = x[best];
  if (m_tilde[best] <= cfg.epsilon) throw AnchorError(m_tilde[best], cfg.epsilon);
  out.anchor_mag = std::sqrt(std::max(m_tilde[best], 0.0));

  // Round 2: real and imaginary parts relative to the anchor.
  std::vector<shadows::BellObservable> ri_obs;
  ri_obs.reserve(2 * x.size());
  for (uint64_t s : x) {
    ri_obs.push_back(shadows::BellObservable::r(out.anchor_t, s));
    ri_obs.push_back(shadows::BellObservable::i(out.anchor_t, s));
  }
  RngStream round2 = rng.substream(2);
  const std::vector<double> ri =
      shadows::estimate_all(choi, ri_obs, out.m2, cfg.delta, round2, &counter, workers);

  out.alpha_hat = PauliMap(u.k);
  for (size_t i = 0; i < x.size(); ++i) {
    const cplx z(ri[2 * i], ri[2 * i + 1]);
    out.alpha_hat.set(x[i], z / out.anchor_mag);
  }

  const double root_eps = std::sqrt(cfg.epsilon);
  out.lemma_eps2 = (out.anchor_mag > root_eps)
                       ? 3.0 * root_eps / (out.anchor_mag - root_eps)
                       : std::numeric_limits<double>::infinity();
  out.sharp_eps2 = cfg.epsilon * (2.0 + 1.0 / out.anchor_mag) / out.anchor_mag;
  return out;
}

PhaseAlignment align_phase(const PauliMap& alpha_hat, const PauliMap& alpha_true) {
  cplx overlap = 0.0;
  for (const auto& [idx, a_true] : alpha_true.entries)
    overlap += a_true * std::conj(alpha_hat.at(idx));
  if (std::abs(overlap) == 0.0)
    throw std::invalid_argument("align_phase: supports do not overlap");
  PhaseAlignment out;
  out.phi = std::arg(overlap);
  if (out.phi < 0) out.phi += 2.0 * std::numbers::pi;
  const cplx w = std::exp(cplx(0, -out.phi));
  std::set<uint64_t> keys;
  for (const auto& [idx, v] : alpha_hat.entries) keys.insert(idx);
  for (const auto& [idx, v] : alpha_true.entries) keys.insert(idx);
  for (uint64_t idx : keys)
    out.max_err = std::max(out.max_err,
                           std::abs(alpha_hat.at(idx) - w * alpha_true.at(idx)));
  return out;
}

namespace {

LearnReport run_pipeline(const DenseOperator& u, LearnConfig cfg, RngStream& rng,
                         int workers, bool truncate) {
  QueryCounter counter;
  RngStream support_rng = rng.substream(100);
  const std::vector<uint64_t> x = find_support(u, cfg, support_rng, counter);

  RngStream est_rng = rng.substream(200);
  const CoefficientEstimate est =
      estimate_coefficients(u, x, cfg, est_rng, counter, workers);

  LearnReport rep;
  rep.support_x = x;
  rep.anchor_t = est.anchor_t;
  rep.anchor_mag = est.anchor_mag;
  rep.m1 = cfg.m1();
  rep.m2 = est.m2;
  rep.total_queries = counter.count;
  rep.inner_epsilon = cfg.epsilon;
  rep.theta = cfg.theta;
  rep.truncation_threshold = truncate ? 2.0 * est.sharp_eps2 : 0.0;
  rep.alpha_hat = PauliMap(u.k);
  for (const auto& [idx, a] : est.alpha_hat.entries)
    if (std::abs(a) >= rep.truncation_threshold) rep.alpha_hat.set(idx, a);
  return rep;
}

}  // namespace

LearnReport learn_nearly_sparse(const DenseOperator& u, uint64_t s, double eps,
                                double delta, RngStream& rng,
                                const LearnConstants& constants, int workers) {
  if (s < 1) throw std::invalid_argument("learn_nearly_sparse: s must be >= 1");
  LearnConfig cfg;
  cfg.mode = Mode::NearlySparse;
  cfg.constants = constants;
  cfg.delta = delta;
  cfg.sparsity_s = s;
  cfg.theta = std::min(1.0, eps / std::sqrt(static_cast<double>(s)));
  const double s3 = static_cast<double>(s) * s * s;
  cfg.epsilon = std::min(0.25, constants.c_acc * eps * eps / s3);
  cfg.validate();
  return run_pipeline(u, cfg, rng, workers, /*truncate=*/true);
}

LearnReport learn_dominant_anchor(const DenseOperator& u, uint64_t s, double eps,
                                  double delta, RngStream& rng,
                                  const LearnConstants& constants, int workers) {
  if (s < 1) throw std::invalid_argument("learn_dominant_anchor: s must be >= 1");
  LearnConfig cfg;
  cfg.mode = Mode::DominantAnchor;
  cfg.constants = constants;
  cfg.delta = delta;
  cfg.sparsity_s = s;
  cfg.theta = std::min(1.0, eps / std::sqrt(static_cast<double>(s)));
  // Corollary preset: only the inner-accuracy schedule changes.
  const double ratio = eps / static_cast<double>(s);
  cfg.epsilon = std::min(0.25, constants.c_acc * ratio * ratio);
  cfg.validate();
  return run_pipeline(u, cfg, rng, workers, /*truncate=*/true);
}

LearnReport learn_l1_bounded(const DenseOperator& u, double l1, double eps,
                             double delta, RngStream& rng,
                             const LearnConstants& constants, int workers) {
  if (l1 < 1.0) throw std::invalid_argument("learn_l1_bounded: l1 must be >= 1");
  LearnConfig cfg;
  cfg.mode = Mode::L1Bounded;
  cfg.constants = constants;
  cfg.delta = delta;
  cfg.l1_bound = l1;
  cfg.theta = std::min(1.0, eps * eps / (12.0 * l1));
  cfg.epsilon = std::min(0.25, constants.c_l1_acc * std::pow(eps, 4) / (l1 * l1));
  cfg.validate();
  return run_pipeline(u, cfg, rng, workers, /*truncate=*/true);
}

}  // namespace learner
}  // namespace paulispec

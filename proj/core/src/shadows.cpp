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

#include "paulispec/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paulispec/parallel.hpp"

namespace paulispec {
namespace shadows {

double BellObservable::trace() const {
  switch (kind) {
    case Kind::M: return 1.0;
    case Kind::R: return (s == t) ? 1.0 : 0.0;
    case Kind::I: return 0.0;
  }
  return 0.0;
}

Mat BellObservable::matrix(int n) const {
  const Vec phi_s = bell_vector(n, s);
  switch (kind) {
    case Kind::M:
      return phi_s * phi_s.adjoint();
    case Kind::R: {
      const Vec phi_t = bell_vector(n, t);
      return 0.5 * (phi_t * phi_s.adjoint() + phi_s * phi_t.adjoint());
    }
    case Kind::I: {
      const Vec phi_t = bell_vector(n, t);
      return 0.5 * (cplx(0, -1) * phi_t * phi_s.adjoint() +
                    cplx(0, 1) * phi_s * phi_t.adjoint());
    }
  }
  return Mat();
}

std::vector<Snapshot> collect(const DenseState& state, uint64_t m, RngStream& rng,
                              QueryCounter* counter) {
  if (state.k % 2 != 0) throw std::invalid_argument("collect: Choi register must be even");
  std::vector<Snapshot> out(m);
  parallel_for(m, [&](uint64_t i) {
    RngStream sub = rng.substream(i);
    CliffordTableau v = sample_uniform(state.k, sub);
    DenseState rotated = apply_to_state(v, state);
    const uint64_t b = measure_computational(rotated, sub);
    out[i] = Snapshot{std::move(v), b, i};
  });
  if (counter) counter->add(m);
  return out;
}

namespace {

// value of <b|V O V^dag|b> given the Bell overlaps of w = V^dag|b>.
inline double observable_value(const BellObservable& obs, cplx c_s, cplx c_t) {
  switch (obs.kind) {
    case BellObservable::Kind::M: return std::norm(c_s);
    case BellObservable::Kind::R: return (c_s * std::conj(c_t)).real();
    // Derived from I_{t,s}: <b|V I V^dag|b> = Im(c_s conj(c_t)).
    case BellObservable::Kind::I: return (c_s * std::conj(c_t)).imag();
  }
  return 0.0;
}

}  // namespace

double eval_snapshot(const Snapshot& snap, const BellObservable& obs) {
  const int k = snap.tableau.k;
  const int n = k / 2;
  const double dplus1 = static_cast<double>(uint64_t{1} << k) + 1.0;
  Vec w = Vec::Zero(int64_t{1} << k);
  w(static_cast<int64_t>(snap.outcome)) = 1.0;
  apply_gates_inverse(w, k, to_gates(snap.tableau));
  const cplx c_s = bell_overlap(w, n, obs.s);
  const cplx c_t = (obs.kind == BellObservable::Kind::M) ? cplx{0, 0}
                                                         : bell_overlap(w, n, obs.t);
  return dplus1 * observable_value(obs, c_s, c_t) - obs.trace();
}

double median_of_means(const std::vector<double>& values, uint64_t batches) {
  if (values.empty()) throw std::invalid_argument("median_of_means: empty input");
  if (batches < 1 || values.size() < batches)
    throw std::invalid_argument("median_of_means: bad batch count");
  const uint64_t size = values.size() / batches;
  std::vector<double> means(batches);
  for (uint64_t b = 0; b < batches; ++b) {
    double acc = 0.0;
    for (uint64_t i = b * size; i < (b + 1) * size; ++i) acc += values[i];
    means[b] = acc / static_cast<double>(size);
  }
  std::nth_element(means.begin(), means.begin() + (batches - 1) / 2, means.end());
  return means[(batches - 1) / 2];
}

uint64_t mom_batches(uint64_t observable_count, double delta) {
  const double m = std::max<double>(observable_count, 1);
  return static_cast<uint64_t>(std::ceil(8.0 * std::log(2.0 * m / delta)));
}

uint64_t shadow_sample_count(uint64_t observable_count, double epsilon, double delta,
                             double shadow_c) {
  const double m = std::max<double>(observable_count, 1);
  return static_cast<uint64_t>(
      std::ceil(shadow_c * std::log(m / delta) / (epsilon * epsilon)));
}

std::vector<double> estimate_all(const DenseState& state,
                                 const std::vector<BellObservable>& observables,
                                 uint64_t m, double delta, RngStream& rng,
                                 QueryCounter* counter, int workers) {
  const size_t nobs = observables.size();
  if (nobs == 0) {
    if (counter) counter->add(m);
    return {};
  }
  const uint64_t batches = mom_batches(nobs, delta);
  if (m < batches) throw std::invalid_argument("estimate_all: m below batch count");
  const uint64_t batch_size = m / batches;

  // Distinct Bell indices referenced by the family, overlaps computed once
  // per snapshot.
  std::vector<uint64_t> indices;
  indices.reserve(2 * nobs);
  for (const auto& o : observables) {
    indices.push_back(o.s);
    if (o.kind != BellObservable::Kind::M) indices.push_back(o.t);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  auto slot = [&](uint64_t idx) {
    return std::lower_bound(indices.begin(), indices.end(), idx) - indices.begin();
  };
  std::vector<std::pair<size_t, size_t>> obs_slots(nobs);
  for (size_t o = 0; o < nobs; ++o) {
    obs_slots[o].first = slot(observables[o].s);
    obs_slots[o].second =
        observables[o].kind == BellObservable::Kind::M ? 0 : slot(observables[o].t);
  }

  const int k = state.k;
  const int n = k / 2;
  const double dplus1 = static_cast<double>(uint64_t{1} << k) + 1.0;
  const int64_t dim = int64_t{1} << k;

  // batch-major sums; each batch is filled in snapshot order by exactly one
  // worker, so results do not depend on scheduling.
  std::vector<double> batch_sums(batches * nobs, 0.0);
  parallel_for(batches, [&](uint64_t b) {
    Vec rotated(dim);
    Vec w(dim);
    std::vector<cplx> c(indices.size());
    double* sums = &batch_sums[b * nobs];
    for (uint64_t i = b * batch_size; i < (b + 1) * batch_size; ++i) {
      RngStream sub = rng.substream(i);
      const CliffordTableau v = sample_uniform(k, sub);
      const std::vector<GateOp> gates = to_gates(v);
      rotated = state.amps;
      apply_gates(rotated, k, gates);
      DenseState tmp(k, std::move(rotated));
      const uint64_t outcome = measure_computational(tmp, sub);
      rotated = std::move(tmp.amps);
      w.setZero();
      w(static_cast<int64_t>(outcome)) = 1.0;
      apply_gates_inverse(w, k, gates);
      for (size_t u = 0; u < indices.size(); ++u) c[u] = bell_overlap(w, n, indices[u]);
      for (size_t o = 0; o < nobs; ++o) {
        const double val = observable_value(observables[o], c[obs_slots[o].first],
                                            c[obs_slots[o].second]);
        sums[o] += dplus1 * val - observables[o].trace();
      }
    }
  }, workers);
  if (counter) counter->add(m);

  std::vector<double> out(nobs);
  std::vector<double> means(batches);
  for (size_t o = 0; o < nobs; ++o) {
    for (uint64_t b = 0; b < batches; ++b)
      means[b] = batch_sums[b * nobs + o] / static_cast<double>(batch_size);
    std::nth_element(means.begin(), means.begin() + (batches - 1) / 2, means.end());
    out[o] = means[(batches - 1) / 2];
  }
  return out;
}

}  // namespace shadows
}  // namespace paulispec

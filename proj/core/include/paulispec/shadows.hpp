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

#pragma once

#include <cstdint>
#include <vector>

#include "paulispec/clifford.hpp"
#include "paulispec/dense.hpp"
#include "paulispec/sim.hpp"

namespace paulispec {
namespace shadows {

// One random-Clifford measurement record: the sampled tableau and the
// computational outcome, plus the RNG substream index for audit.
struct Snapshot {
  CliffordTableau tableau;
  uint64_t outcome = 0;
  uint64_t stream_index = 0;
};

// Rank <= 2 Bell-basis observables on the Choi register:
//   M_s      = |phi_s><phi_s|                      (rank 1, trace 1)
//   R_{t,s}  = (|phi_t><phi_s| + h.c.) / 2          (trace [t==s])
//   I_{t,s}  = (-i|phi_t><phi_s| + h.c.) / 2        (traceless)
struct BellObservable {
  enum class Kind { M, R, I };
  Kind kind = Kind::M;
  uint64_t s = 0;
  uint64_t t = 0;  // anchor; unused for M

  static BellObservable m(uint64_t s) { return {Kind::M, s, 0}; }
  static BellObservable r(uint64_t t, uint64_t s) { return {Kind::R, s, t}; }
  static BellObservable i(uint64_t t, uint64_t s) { return {Kind::I, s, t}; }

  double trace() const;
  // Dense matrix on 2n qubits (test oracle).
  Mat matrix(int n) const;
};

// m independent snapshots of the state; one query per snapshot when the
// state is a Choi copy (the counter is threaded by the caller).
std::vector<Snapshot> collect(const DenseState& state, uint64_t m, RngStream& rng,
                              QueryCounter* counter = nullptr);

// Single-snapshot estimator (D+1) <b|V O V^dag|b> - Tr(O) with D = 2^{2n},
// evaluated through at most two Bell overlaps c_u = <phi_u|V^dag|b>.
double eval_snapshot(const Snapshot& snap, const BellObservable& obs);

// Median of contiguous equal-size batch means; remainder values discarded;
// the median of an even count is the lower-middle element.
double median_of_means(const std::vector<double>& values, uint64_t batches);

// Median-of-means batch count used by estimate_all.
uint64_t mom_batches(uint64_t observable_count, double delta);
// Snapshot budget C log(M/delta)/eps^2 with the configured constant.
uint64_t shadow_sample_count(uint64_t observable_count, double epsilon, double delta,
                             double shadow_c = 34.0);

// Streaming collect + evaluate + median-of-means for a whole observable
// family. Identical numbers to the collect/eval/median composition, without
// materializing m snapshots. Deterministic for any worker count.
std::vector<double> estimate_all(const DenseState& state,
                                 const std::vector<BellObservable>& observables,
                                 uint64_t m, double delta, RngStream& rng,
                                 QueryCounter* counter = nullptr, int workers = 0);

}  // namespace shadows
}  // namespace paulispec

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

#include "paulispec/dense.hpp"
#include "paulispec/pauli.hpp"
#include "paulispec/rng.hpp"

namespace paulispec {

// Counts applications of the black-box unitary. One Choi-state copy is one
// query; the learner's total is m1 + 2*m2 exactly.
struct QueryCounter {
  uint64_t count = 0;
  void add(uint64_t queries = 1) { count += queries; }
};

// |J(U)> on 2n qubits, block layout [system A qubits 0..n-1 | reference R
// qubits n..2n-1]: amplitude at (a,r) is U(a,r)/sqrt(N). Does not count as a
// query; the sampling loops account for the copies they consume.
DenseState choi_state(const DenseOperator& u);

// One prepared copy of |J(U)>; increments the counter by exactly 1.
DenseState prepare_choi(const DenseOperator& u, QueryCounter& counter);

// Joint Bell-basis measurement, realized as a projective Bell measurement on
// each pair (qubit i, qubit n+i). Returns base-4 outcome indices; draws
// Pr[s] = |<phi_s|state>|^2, deterministic given the stream.
std::vector<uint64_t> bell_sample(const DenseState& state, RngStream& rng,
                                  uint64_t shots);

// One computational-basis draw with Pr[b] = |amplitude_b|^2.
uint64_t measure_computational(const DenseState& state, RngStream& rng);

// <phi_u|w> for a 2n-qubit vector w, with |phi_u> = (sigma^u x I)|EPR>^n.
cplx bell_overlap(const Vec& w, int n, uint64_t u_index);
// Explicit Bell basis vector |phi_u> (test oracle; O(4^n) construction).
Vec bell_vector(int n, uint64_t u_index);

}  // namespace paulispec

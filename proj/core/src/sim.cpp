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

#include "paulispec/sim.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace paulispec {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Per-pair Bell amplitudes of |phi_d> over (00,01,10,11), derived from
// |phi_d> = (sigma^d x I)|EPR| with |EPR> = (|00>+|11>)/sqrt(2):
//   d=0: (1,0,0,1)/sqrt2   d=1: (0,1,1,0)/sqrt2
//   d=2: (0,-i,i,0)/sqrt2  d=3: (1,0,0,-1)/sqrt2
const cplx kBellAmp[4][4] = {
    {{kInvSqrt2, 0}, {0, 0}, {0, 0}, {kInvSqrt2, 0}},
    {{0, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {0, 0}},
    {{0, 0}, {0, -kInvSqrt2}, {0, kInvSqrt2}, {0, 0}},
    {{kInvSqrt2, 0}, {0, 0}, {0, 0}, {-kInvSqrt2, 0}}};

}  // namespace

DenseState choi_state(const DenseOperator& u) {
  const int n = u.k;
  if (2 * n > dense_cap())
    throw std::invalid_argument("choi_state: Choi register exceeds dense cap");
  if (!u.is_unitary()) throw std::invalid_argument("choi_state: operator is not unitary");
  const int64_t dim = int64_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Vec amps(dim * dim);
  for (int64_t a = 0; a < dim; ++a)
    for (int64_t r = 0; r < dim; ++r) amps(a * dim + r) = u.matrix(a, r) * scale;
  return DenseState(2 * n, std::move(amps));
}

DenseState prepare_choi(const DenseOperator& u, QueryCounter& counter) {
  DenseState state = choi_state(u);
  counter.add(1);
  return state;
}

std::vector<uint64_t> bell_sample(const DenseState& state, RngStream& rng,
                                  uint64_t shots) {
  if (state.k % 2 != 0) throw std::invalid_argument("bell_sample: odd qubit count");
  if (!state.is_normalized()) throw std::invalid_argument("bell_sample: state not normalized");
  const int n = state.k / 2;
  const int64_t dim = int64_t{1} << state.k;

  std::vector<uint64_t> outcomes;
  outcomes.reserve(shots);
  Vec work(dim);
  for (uint64_t shot = 0; shot < shots; ++shot) {
    RngStream sub = rng.substream(shot);
    work = state.amps;
    uint64_t s = 0;
    for (int i = 0; i < n; ++i) {
      const int64_t ma = int64_t{1} << (state.k - 1 - i);      // system qubit i
      const int64_t mr = int64_t{1} << (n - 1 - i);            // reference qubit n+i
      // Probabilities of the four Bell outcomes on this pair.
      double p[4] = {0, 0, 0, 0};
      for (int64_t idx = 0; idx < dim; ++idx) {
        if (idx & (ma | mr)) continue;
        const cplx a00 = work(idx);
        const cplx a01 = work(idx | mr);
        const cplx a10 = work(idx | ma);
        const cplx a11 = work(idx | ma | mr);
        p[0] += std::norm((a00 + a11) * kInvSqrt2);
        p[1] += std::norm((a01 + a10) * kInvSqrt2);
        p[2] += std::norm((cplx(0, 1) * (a01 - a10)) * kInvSqrt2);
        p[3] += std::norm((a00 - a11) * kInvSqrt2);
      }
      const double total = p[0] + p[1] + p[2] + p[3];
      double draw = sub.next_double() * total;
      int d = 3;
      for (int c = 0; c < 3; ++c) {
        if (draw < p[c]) { d = c; break; }
        draw -= p[c];
      }
      // Project the pair onto |phi_d> and renormalize.
      const double inv_norm = 1.0 / std::sqrt(p[d]);
      for (int64_t idx = 0; idx < dim; ++idx) {
        if (idx & (ma | mr)) continue;
        const cplx a00 = work(idx);
        const cplx a01 = work(idx | mr);
        const cplx a10 = work(idx | ma);
        const cplx a11 = work(idx | ma | mr);
        cplx c = 0.0;
        switch (d) {
          case 0: c = (a00 + a11) * kInvSqrt2; break;
          case 1: c = (a01 + a10) * kInvSqrt2; break;
          case 2: c = cplx(0, 1) * (a01 - a10) * kInvSqrt2; break;
          case 3: c = (a00 - a11) * kInvSqrt2; break;
        }
        c *= inv_norm;
        work(idx) = c * kBellAmp[d][0];
        work(idx | mr) = c * kBellAmp[d][1];
        work(idx | ma) = c * kBellAmp[d][2];
        work(idx | ma | mr) = c * kBellAmp[d][3];
      }
      s |= static_cast<uint64_t>(d) << (2 * (n - 1 - i));
    }
    outcomes.push_back(s);
  }
  return outcomes;
}

uint64_t measure_computational(const DenseState& state, RngStream& rng) {
  if (!state.is_normalized()) throw std::invalid_argument("measure: state not normalized");
  const int64_t dim = state.amps.size();
  double draw = rng.next_double();
  double acc = 0.0;
  for (int64_t b = 0; b < dim; ++b) {
    acc += std::norm(state.amps(b));
    if (draw < acc) return static_cast<uint64_t>(b);
  }
  return static_cast<uint64_t>(dim - 1);
}

cplx bell_overlap(const Vec& w, int n, uint64_t u_index) {
  const PauliString p = PauliString::from_index(n, u_index);
  const int64_t dim = int64_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  cplx acc = 0.0;
  for (int64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(p.z & static_cast<uint64_t>(b)) & 1) ? -1.0 : 1.0;
    acc += sign * w((b ^ static_cast<int64_t>(p.x)) * dim + b);
  }
  // conj(i^{|x&z|}) folded in front.
  return kIPow[(4 - std::popcount(p.x & p.z) % 4) % 4] * acc * scale;
}

Vec bell_vector(int n, uint64_t u_index) {
  const PauliString p = PauliString::from_index(n, u_index);
  const int64_t dim = int64_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Vec v = Vec::Zero(dim * dim);
  const cplx front = kIPow[std::popcount(p.x & p.z) % 4];
  for (int64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(p.z & static_cast<uint64_t>(b)) & 1) ? -1.0 : 1.0;
    v((b ^ static_cast<int64_t>(p.x)) * dim + b) = front * sign * scale;
  }
  return v;
}

}  // namespace paulispec

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

#include <doctest.h>

#include <cmath>
#include <map>

#include "paulispec/pauli.hpp"
#include "paulispec/sim.hpp"

using namespace paulispec;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DenseOperator hadamard_op() {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  return DenseOperator(1, h * kInvSqrt2);
}

DenseOperator z_rotation(double theta) {
  Mat u(2, 2);
  u << std::exp(cplx(0, -theta)), 0, 0, std::exp(cplx(0, theta));
  return DenseOperator(1, u);
}

}  // namespace

TEST_SUITE_BEGIN("sim");

TEST_CASE("Choi state of the identity is the EPR pair") {
  QueryCounter qc;
  const DenseState j = prepare_choi(DenseOperator::identity(1), qc);
  CHECK(qc.count == 1);
  CHECK(std::abs(j.amps(0) - kInvSqrt2) < 1e-15);  // |00>
  CHECK(std::abs(j.amps(3) - kInvSqrt2) < 1e-15);  // |11>
  CHECK(std::abs(j.amps(1)) + std::abs(j.amps(2)) < 1e-15);
}

TEST_CASE("Choi state of X swaps the pair") {
  QueryCounter qc;
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  const DenseState j = prepare_choi(DenseOperator(1, x), qc);
  CHECK(std::abs(j.amps(1) - kInvSqrt2) < 1e-15);  // |01>
  CHECK(std::abs(j.amps(2) - kInvSqrt2) < 1e-15);  // |10>
}

TEST_CASE("Choi amplitudes in the Bell basis are the Pauli coefficients") {
  QueryCounter qc;
  const DenseState j = prepare_choi(hadamard_op(), qc);
  CHECK(std::norm(bell_overlap(j.amps, 1, 1)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::norm(bell_overlap(j.amps, 1, 3)) == doctest::Approx(0.5).epsilon(1e-12));
  // Exact complex equality with decompose, phases included.
  RngStream rng(12, "choi");
  for (int trial = 0; trial < 5; ++trial) {
    const DenseOperator u(2, random_unitary(2, rng));
    const DenseState ju = choi_state(u);
    const PauliMap map = decompose(u.matrix);
    for (uint64_t s = 0; s < 256; ++s)
      CHECK(std::abs(bell_overlap(ju.amps, 2, s) - map.at(s)) < 1e-12);
  }
}

TEST_CASE("bell_vector matches bell_overlap") {
  RngStream rng(19, "bellvec");
  const Vec w = random_state(4, rng);
  for (uint64_t s = 0; s < 16; ++s) {
    const Vec phi = bell_vector(2, s);
    CHECK(std::abs(phi.dot(w) - bell_overlap(w, 2, s)) < 1e-13);
  }
  // Orthonormal family.
  for (uint64_t s = 0; s < 16; ++s)
    for (uint64_t t = 0; t < 16; ++t) {
      const cplx ip = bell_vector(2, s).dot(bell_vector(2, t));
      CHECK(std::abs(ip - (s == t ? cplx(1) : cplx(0))) < 1e-13);
    }
}

TEST_CASE("Bell sampling J(Z) always yields the Z outcome") {
  QueryCounter qc;
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  const DenseState j = prepare_choi(DenseOperator(1, z), qc);
  RngStream rng(1, "bell");
  for (uint64_t s : bell_sample(j, rng, 200)) CHECK(s == 3);
}

TEST_CASE("Bell sampling a Z rotation splits I and Z evenly at pi/4") {
  QueryCounter qc;
  const DenseState j = prepare_choi(z_rotation(std::numbers::pi / 4), qc);
  RngStream rng(2, "bell");
  const auto outcomes = bell_sample(j, rng, 10000);
  uint64_t count_i = 0;
  for (uint64_t s : outcomes) {
    REQUIRE((s == 0 || s == 3));
    if (s == 0) ++count_i;
  }
  const double frac = static_cast<double>(count_i) / outcomes.size();
  CHECK(frac == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("Bell sampling matches the decomposition law in TV") {
  RngStream urng(33, "haar");
  const DenseOperator u(2, random_unitary(2, urng));
  const DenseState j = choi_state(u);
  const PauliMap map = decompose(u.matrix);
  RngStream rng(4, "bell");
  const uint64_t shots = 200000;
  const auto outcomes = bell_sample(j, rng, shots);
  std::map<uint64_t, uint64_t> counts;
  for (uint64_t s : outcomes) ++counts[s];
  double tv = 0.0;
  for (uint64_t s = 0; s < 256; ++s) {
    const double emp = counts.count(s) ? static_cast<double>(counts[s]) / shots : 0.0;
    tv += std::abs(emp - std::norm(map.at(s)));
  }
  tv /= 2.0;
  CHECK(tv < 0.03);
}

TEST_CASE("computational measurement follows Born probabilities") {
  DenseState zero = DenseState::zero_state(3);
  RngStream rng(5, "meas");
  for (int i = 0; i < 50; ++i) CHECK(measure_computational(zero, rng) == 0);

  Vec plus(2);
  plus << kInvSqrt2, kInvSqrt2;
  DenseState p(1, plus);
  uint64_t ones = 0;
  const int shots = 10000;
  for (int i = 0; i < shots; ++i) ones += measure_computational(p, rng);
  CHECK(static_cast<double>(ones) / shots == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("H tensor H measures uniformly (chi-square)") {
  Vec amps = Vec::Constant(4, cplx(0.5, 0));
  DenseState s(2, amps);
  RngStream rng(6, "meas2");
  const uint64_t shots = 40000;
  std::vector<uint64_t> counts(4, 0);
  for (uint64_t i = 0; i < shots; ++i) ++counts[measure_computational(s, rng)];
  double stat = 0.0;
  for (uint64_t c : counts) {
    const double d = static_cast<double>(c) - shots / 4.0;
    stat += d * d / (shots / 4.0);
  }
  CHECK(stat < 16.27);  // chi2 quantile, dof 3, p = 1e-3
}

TEST_CASE("seeded Bell sampling is reproducible") {
  QueryCounter qc;
  const DenseState j = prepare_choi(hadamard_op(), qc);
  RngStream a(9, "rep"), b(9, "rep");
  CHECK(bell_sample(j, a, 500) == bell_sample(j, b, 500));
}

TEST_CASE("prepare_choi rejects non-unitary input") {
  QueryCounter qc;
  CHECK_THROWS_AS(prepare_choi(DenseOperator(1, Mat::Zero(2, 2)), qc),
                  std::invalid_argument);
}

TEST_CASE("bell_sample rejects odd registers") {
  DenseState s = DenseState::zero_state(3);
  RngStream rng(1, "odd");
  CHECK_THROWS_AS(bell_sample(s, rng, 1), std::invalid_argument);
}

TEST_SUITE_END();

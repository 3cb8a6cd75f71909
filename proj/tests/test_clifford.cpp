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

#include <map>
#include <set>

#include "paulispec/clifford.hpp"
#include "paulispec/metrics.hpp"
#include "paulispec/oracle.hpp"

using namespace paulispec;

namespace {

CliffordTableau gate_tableau(int k, std::initializer_list<GateOp> gates) {
  CliffordTableau t = CliffordTableau::identity(k);
  for (const GateOp& g : gates) t.prepend(g);
  return t;
}

// Dense conjugation oracle: V sigma V^dag compared entrywise.
bool conjugation_matches(const CliffordTableau& t, const PauliString& p) {
  const Mat v = tableau_to_matrix(t);
  const PauliString img = conjugate_pauli(t, p);
  const Mat lhs = v * p.matrix() * v.adjoint();
  return (lhs - img.matrix()).cwiseAbs().maxCoeff() < 1e-12;
}

}  // namespace

TEST_SUITE_BEGIN("clifford");

TEST_CASE("H maps X to Z and Z to X") {
  const CliffordTableau h = gate_tableau(1, {{Gate::H, 0}});
  const PauliString ix = conjugate_pauli(h, PauliString::from_text("X"));
  CHECK(ix.text() == "Z");
  CHECK(ix.phase_exp == 0);
  const PauliString iz = conjugate_pauli(h, PauliString::from_text("Z"));
  CHECK(iz.text() == "X");
  CHECK(iz.phase_exp == 0);
}

TEST_CASE("S maps X to +Y") {
  const CliffordTableau s = gate_tableau(1, {{Gate::S, 0}});
  const PauliString img = conjugate_pauli(s, PauliString::from_text("X"));
  CHECK(img.text() == "Y");
  CHECK(img.phase_exp == 0);
}

TEST_CASE("tableau conjugation agrees with dense conjugation") {
  RngStream rng(2, "conj");
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(3));
    const CliffordTableau t = sample_uniform(k, rng);
    const PauliString p =
        PauliString::from_index(k, rng.next_below(uint64_t{1} << (2 * k)));
    CHECK(conjugation_matches(t, p));
  }
}

TEST_CASE("sampled tableaux are symplectic and conjugate involutions") {
  RngStream rng(3, "symp");
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(4));
    const CliffordTableau t = sample_uniform(k, rng);
    REQUIRE(t.is_symplectic());
    const PauliString p =
        PauliString::from_index(k, rng.next_below(uint64_t{1} << (2 * k)));
    const PauliString img = conjugate_pauli(t, p);
    const PauliString sq = pauli_mul(img, img);
    CHECK(sq.is_identity());
    CHECK(sq.phase_exp == 0);
  }
}

TEST_CASE("identity tableau synthesizes to the empty sequence") {
  CHECK(to_gates(CliffordTableau::identity(3)).empty());
}

TEST_CASE("H tableau synthesizes to a matrix equal to H") {
  const CliffordTableau h = gate_tableau(1, {{Gate::H, 0}});
  const Mat m = tableau_to_matrix(h);
  Mat expect(2, 2);
  expect << 1, 1, 1, -1;
  expect /= std::sqrt(2.0);
  CHECK(metrics::d_optphase(expect, m).value < 1e-12);
}

TEST_CASE("synthesis reproduces every generator image") {
  RngStream rng(5, "togates");
  for (int trial = 0; trial < 12; ++trial) {
    const int k = (trial < 8) ? 1 + static_cast<int>(rng.next_below(3)) : 4;
    const CliffordTableau t = sample_uniform(k, rng);
    const Mat v = tableau_to_matrix(t);
    CHECK(DenseOperator(k, v).is_unitary(1e-10));
    for (int q = 0; q < k; ++q) {
      for (bool zrow : {false, true}) {
        const PauliString gen = zrow ? PauliString::single(k, q, 'Z')
                                     : PauliString::single(k, q, 'X');
        const TableauRow& row = zrow ? t.z_row(q) : t.x_row(q);
        const Mat img = v * gen.matrix() * v.adjoint();
        const Mat expect =
            (row.neg ? -1.0 : 1.0) * PauliString{k, row.x, row.z, 0}.matrix();
        CHECK((img - expect).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("gate tableau of a known circuit matches its dense matrix") {
  const CliffordTableau t =
      gate_tableau(3, {{Gate::H, 0}, {Gate::CNOT, 0, 2}, {Gate::S, 1}, {Gate::CNOT, 2, 1},
                       {Gate::H, 2}, {Gate::S, 2}});
  Vec col = Vec::Zero(8);
  // Compare action on random states.
  RngStream rng(7, "circ");
  const Vec psi = random_state(3, rng);
  Vec expect = psi;
  apply_gates(expect, 3,
              {{Gate::H, 0}, {Gate::CNOT, 0, 2}, {Gate::S, 1}, {Gate::CNOT, 2, 1},
               {Gate::H, 2}, {Gate::S, 2}});
  const DenseState out = apply_to_state(t, DenseState(3, psi));
  // Global phase free comparison.
  cplx phase = 0.0;
  for (int i = 0; i < 8; ++i)
    if (std::abs(expect(i)) > 0.3) { phase = out.amps(i) / expect(i); break; }
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-10);
  CHECK((out.amps - phase * expect).norm() < 1e-10);
  (void)col;
}

TEST_CASE("apply_to_state at k=6 matches the dense matrix") {
  RngStream rng(11, "k6");
  const CliffordTableau t = sample_uniform(6, rng);
  const Vec psi = random_state(6, rng);
  const DenseState out = apply_to_state(t, DenseState(6, psi));
  const Mat v = tableau_to_matrix(t);
  CHECK((out.amps - v * psi).norm() < 1e-9);
}

TEST_CASE("composition matches matrix products up to phase") {
  RngStream rng(13, "comp");
  for (int trial = 0; trial < 8; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(2));
    const CliffordTableau a = sample_uniform(k, rng);
    const CliffordTableau b = sample_uniform(k, rng);
    const CliffordTableau ab = compose(a, b);
    REQUIRE(ab.is_symplectic());
    const Mat lhs = tableau_to_matrix(a) * tableau_to_matrix(b);
    CHECK(metrics::d_optphase(lhs, tableau_to_matrix(ab)).value < 1e-10);
  }
}

TEST_CASE("the sampler covers the 24 single-qubit classes uniformly") {
  RngStream rng(17, "uniform1");
  std::map<uint64_t, uint64_t> counts;
  const uint64_t samples = 24000;
  for (uint64_t i = 0; i < samples; ++i) ++counts[tableau_key(sample_uniform(1, rng))];
  REQUIRE(counts.size() == 24);
  std::vector<uint64_t> c;
  for (const auto& [key, v] : counts) c.push_back(v);
  const std::vector<double> expected(24, samples / 24.0);
  const double stat = oracle::chi2_statistic(c, expected);
  CHECK(stat < oracle::chi2_threshold(23, 0.999));
}

TEST_CASE("the sampler covers the 11520 two-qubit classes uniformly") {
  // Brute-force enumeration by closure over the generator set.
  std::set<uint64_t> group;
  std::vector<CliffordTableau> frontier = {CliffordTableau::identity(2)};
  group.insert(tableau_key(frontier[0]));
  const std::vector<GateOp> gens = {
      {Gate::H, 0}, {Gate::H, 1}, {Gate::S, 0}, {Gate::S, 1},
      {Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 0}};
  while (!frontier.empty()) {
    std::vector<CliffordTableau> next;
    for (const auto& t : frontier) {
      for (const GateOp& g : gens) {
        CliffordTableau u = t;
        u.prepend(g);
        if (group.insert(tableau_key(u)).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  REQUIRE(group.size() == 11520);

  RngStream rng(19, "uniform2");
  std::map<uint64_t, uint64_t> counts;
  const uint64_t samples = 200000;
  for (uint64_t i = 0; i < samples; ++i) {
    const uint64_t key = tableau_key(sample_uniform(2, rng));
    REQUIRE(group.count(key) == 1);
    ++counts[key];
  }
  std::vector<uint64_t> c;
  for (uint64_t key : group) c.push_back(counts.count(key) ? counts[key] : 0);
  const std::vector<double> expected(11520, samples / 11520.0);
  const double stat = oracle::chi2_statistic(c, expected);
  CHECK(stat < oracle::chi2_threshold(11519, 0.9999));
}

TEST_SUITE_END();

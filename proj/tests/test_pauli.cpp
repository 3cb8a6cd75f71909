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

#include "paulispec/dense.hpp"
#include "paulispec/pauli.hpp"
#include "paulispec/rng.hpp"

using namespace paulispec;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Mat hadamard() {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  return h * kInvSqrt2;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

PauliMap random_map(int n, int terms, RngStream& rng) {
  PauliMap map(n);
  const uint64_t total = uint64_t{1} << (2 * n);
  while (static_cast<int>(map.size()) < terms) {
    const uint64_t idx = rng.next_below(total);
    map.set(idx, cplx(rng.next_gaussian(), rng.next_gaussian()));
  }
  return map;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("text and index round-trip losslessly") {
  for (const char* text : {"I", "X", "Y", "Z", "XIZ", "YYX", "IZXY"}) {
    const PauliString p = PauliString::from_text(text);
    CHECK(p.text() == text);
    const PauliString q = PauliString::from_index(p.n, p.index());
    CHECK(q == p);
  }
  // Qubit 0 is the most significant base-4 digit.
  CHECK(PauliString::from_text("XI").index() == 4);
  CHECK(PauliString::from_text("IX").index() == 1);
  CHECK(PauliString::from_text("ZI").index() == 12);
}

TEST_CASE("single-qubit matrices are the standard Paulis") {
  Mat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  CHECK(max_abs_diff(PauliString::from_text("X").matrix(), x) < 1e-15);
  CHECK(max_abs_diff(PauliString::from_text("Y").matrix(), y) < 1e-15);
  CHECK(max_abs_diff(PauliString::from_text("Z").matrix(), z) < 1e-15);
}

TEST_CASE("phase-free words are Hermitian, unitary, traceless") {
  RngStream rng(11, "pauli-words");
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(3));
    const uint64_t idx = rng.next_below(uint64_t{1} << (2 * n));
    const Mat m = PauliString::from_index(n, idx).matrix();
    CHECK(max_abs_diff(m, m.adjoint()) < 1e-14);
    CHECK(max_abs_diff(m * m, Mat::Identity(m.rows(), m.cols())) < 1e-14);
    if (idx != 0) CHECK(std::abs(m.trace()) < 1e-14);
  }
}

TEST_CASE("X times Z is -iY") {
  const PauliString c =
      pauli_mul(PauliString::from_text("X"), PauliString::from_text("Z"));
  CHECK(c.text() == "Y");
  CHECK(c.phase_exp == 3);
}

TEST_CASE("every word squares to the identity") {
  RngStream rng(5, "squares");
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(4));
    const PauliString p =
        PauliString::from_index(n, rng.next_below(uint64_t{1} << (2 * n)));
    const PauliString sq = pauli_mul(p, p);
    CHECK(sq.is_identity());
    CHECK(sq.phase_exp == 0);
  }
}

TEST_CASE("disjoint supports multiply without phase") {
  const PauliString c =
      pauli_mul(PauliString::from_text("XI"), PauliString::from_text("IZ"));
  CHECK(c.text() == "XZ");
  CHECK(c.phase_exp == 0);
}

TEST_CASE("product phase matches dense matrices on random triples") {
  RngStream rng(17, "triples");
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(3));
    const uint64_t total = uint64_t{1} << (2 * n);
    const PauliString a = PauliString::from_index(n, rng.next_below(total));
    const PauliString b = PauliString::from_index(n, rng.next_below(total));
    const PauliString c = PauliString::from_index(n, rng.next_below(total));
    const PauliString ab_c = pauli_mul(pauli_mul(a, b), c);
    const PauliString a_bc = pauli_mul(a, pauli_mul(b, c));
    CHECK(ab_c == a_bc);
    CHECK(max_abs_diff(a.matrix() * b.matrix(), pauli_mul(a, b).matrix()) < 1e-12);
  }
}

TEST_CASE("decompose of Hadamard gives X and Z at 1/sqrt2") {
  const PauliMap map = decompose(hadamard());
  REQUIRE(map.size() == 2);
  CHECK(std::abs(map.at(PauliString::from_text("X").index()) - kInvSqrt2) < 1e-14);
  CHECK(std::abs(map.at(PauliString::from_text("Z").index()) - kInvSqrt2) < 1e-14);
}

TEST_CASE("decompose of a Z rotation is cos and -i sin") {
  const double theta = 0.37;
  Mat u(2, 2);
  u << std::exp(cplx(0, -theta)), 0, 0, std::exp(cplx(0, theta));
  const PauliMap map = decompose(u);
  REQUIRE(map.size() == 2);
  CHECK(std::abs(map.at(0) - cplx(std::cos(theta), 0)) < 1e-14);
  CHECK(std::abs(map.at(3) - cplx(0, -std::sin(theta))) < 1e-14);
}

TEST_CASE("two-qubit Grover diffusion has Pauli l1 norm 2") {
  Mat d = Mat::Constant(4, 4, cplx(0.5, 0));
  d -= Mat::Identity(4, 4);
  CHECK(norms(decompose(d)).l1 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("synthesize inverts decompose on dense operators") {
  RngStream rng(23, "roundtrip");
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(3));
    const Mat u = random_unitary(n, rng);
    CHECK(max_abs_diff(synthesize(decompose(u)), u) < 1e-10);
  }
}

TEST_CASE("decompose inverts synthesize on sparse maps") {
  RngStream rng(29, "roundtrip2");
  for (int trial = 0; trial < 10; ++trial) {
    const PauliMap map = random_map(3, 6, rng);
    const PauliMap back = decompose(synthesize(map));
    REQUIRE(back.size() == map.size());
    for (const auto& [idx, v] : map.entries) CHECK(std::abs(back.at(idx) - v) < 1e-12);
  }
}

TEST_CASE("Parseval holds for random unitaries") {
  RngStream rng(31, "parseval");
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(3));
    const Mat u = random_unitary(n, rng);
    const PauliNorms nm = norms(decompose(u));
    CHECK(nm.l2 == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("norm chain and simple values") {
  PauliMap map(1);
  map.set(1, cplx(0.6, 0));       // X
  map.set(2, cplx(0, 0.8));       // Y
  const PauliNorms nm = norms(map);
  CHECK(nm.l1 == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(nm.l2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(nm.linf == doctest::Approx(0.8).epsilon(1e-12));

  RngStream rng(37, "chain");
  for (int trial = 0; trial < 20; ++trial) {
    const PauliMap m = random_map(2, 5, rng);
    const PauliNorms v = norms(m);
    CHECK(v.linf <= v.l2 + 1e-12);
    CHECK(v.l2 <= v.l1 + 1e-12);
  }
}

TEST_CASE("phase oracle at x=00 has l1 norm 3 - 4/N") {
  Mat u = Mat::Identity(4, 4);
  u(0, 0) = -1.0;
  CHECK(norms(decompose(u)).l1 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("nearly sparse certificate: exact sparsity and Hadamard") {
  RngStream rng(41, "cert");
  const PauliMap map = random_map(2, 3, rng);
  CHECK(nearly_sparse_certificate(map, 3).residual_l1 == 0.0);

  const PauliMap h = decompose(hadamard());
  const SparsityCertificate cert = nearly_sparse_certificate(h, 1);
  CHECK(cert.residual_l1 == doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("nearly sparse certificate on a two-rotation product") {
  // exp(-i 0.1 XI) exp(-i 0.1 IZ): residual past S_1 is sin(0.1)^2.
  const double t = 0.1;
  const Mat xi = PauliString::from_text("XI").matrix();
  const Mat iz = PauliString::from_text("IZ").matrix();
  const Mat id = Mat::Identity(4, 4);
  const Mat u = (std::cos(t) * id - cplx(0, 1) * std::sin(t) * xi) *
                (std::cos(t) * id - cplx(0, 1) * std::sin(t) * iz);
  const SparsityCertificate cert = nearly_sparse_certificate(decompose(u), 3);
  CHECK(cert.residual_l1 ==
        doctest::Approx(std::sin(t) * std::sin(t)).epsilon(1e-10));
}

TEST_CASE("certificate ties break toward the smaller index") {
  PauliMap map(1);
  map.set(1, cplx(0.5, 0));
  map.set(2, cplx(0.5, 0));
  map.set(3, cplx(0.5, 0));
  const SparsityCertificate cert = nearly_sparse_certificate(map, 2);
  REQUIRE(cert.support.size() == 2);
  CHECK(cert.support[0] == 1);
  CHECK(cert.support[1] == 2);
}

TEST_CASE("decompose rejects bad shapes") {
  CHECK_THROWS_AS(decompose(Mat::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(decompose(Mat::Zero(4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(pauli_mul(PauliString::from_text("X"), PauliString::from_text("XX")),
                  std::invalid_argument);
}

TEST_SUITE_END();

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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace paulispec {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Index conventions, used consistently across the whole library:
//  - Qubit 0 is the leftmost character of the text form and the most
//    significant base-4 digit of the index.
//  - Bit/digit position p of a mask or index addresses qubit (n-1-p), so
//    mask bits line up with computational-basis state indices.
//  - Digits encode (x,z) pairs as 0:I=(0,0), 1:X=(1,0), 2:Y=(1,1), 3:Z=(0,1).
inline constexpr double kDecomposePrune = 1e-12;

// An n-qubit Pauli word i^phase_exp * sigma^s in symplectic (x,z) form.
// The phase-free word sigma^s is the Hermitian tensor product of I,X,Y,Z;
// phase_exp only becomes nonzero transiently while multiplying words.
struct PauliString {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  int phase_exp = 0;  // power of i, mod 4

  static PauliString identity(int n) { return PauliString{n, 0, 0, 0}; }
  static PauliString from_index(int n, uint64_t index);
  static PauliString from_text(std::string_view text);
  // Single non-identity letter ('X','Y','Z') acting on one qubit.
  static PauliString single(int n, int qubit, char letter);

  uint64_t index() const;
  std::string text() const;
  // Dense matrix including the i^phase_exp prefactor.
  Mat matrix() const;
  bool is_identity() const { return x == 0 && z == 0; }
  int weight() const;
  bool commutes_with(const PauliString& other) const;

  bool operator==(const PauliString&) const = default;
};

// c with matrix(a)*matrix(b) == matrix(c); masks XOR, phase tracked mod 4.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

struct PauliNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

struct SparsityCertificate {
  std::vector<uint64_t> support;  // ascending base-4 indices
  double residual_l1 = 0.0;
};

// Sparse association index -> complex coefficient. Entries of magnitude
// exactly zero are never stored; iteration order (std::map) is ascending
// index, which fixes serialization and tie-breaking everywhere.
struct PauliMap {
  int n = 0;
  std::map<uint64_t, cplx> entries;

  PauliMap() = default;
  explicit PauliMap(int n_) : n(n_) {}

  void set(uint64_t index, cplx value);
  void add(uint64_t index, cplx value);
  cplx at(uint64_t index) const;
  void prune(double threshold);
  size_t size() const { return entries.size(); }
};

PauliNorms norms(const PauliMap& coeffs);

// Brute-force oracle: alpha_s = 2^{-n} Tr(op sigma^s) over all 4^n strings,
// pruned below kDecomposePrune. Every derived expectation in the test suites
// routes through this.
PauliMap decompose(const Mat& op);

// Sum_s alpha_s sigma^s as a dense matrix; inverse of decompose.
Mat synthesize(const PauliMap& coeffs);

SparsityCertificate nearly_sparse_certificate(const PauliMap& coeffs, uint64_t s);

// Exact sparse algebra (used for stabilizer projectors and Taylor truncations).
PauliMap map_mul(const PauliMap& a, const PauliMap& b, double prune = 1e-15);
PauliMap map_add(const PauliMap& a, const PauliMap& b, cplx scale_b = 1.0);
PauliMap map_scale(const PauliMap& a, cplx scale);

}  // namespace paulispec

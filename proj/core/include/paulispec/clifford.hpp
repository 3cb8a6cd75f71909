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

// Signed Pauli word, the image of a generator under conjugation.
struct TableauRow {
  uint64_t x = 0;
  uint64_t z = 0;
  bool neg = false;

  bool operator==(const TableauRow&) const = default;
};

// Clifford element on k qubits, stored as the conjugation images of the 2k
// Pauli generators: row i is U X_i U^dagger, row k+i is U Z_i U^dagger.
// The 2k x 2k binary matrix of (x|z) parts is symplectic; signs are the 2k
// phase bits. Mask bit p addresses qubit (k-1-p), as everywhere else.
struct CliffordTableau {
  int k = 0;
  std::vector<TableauRow> rows;  // size 2k

  static CliffordTableau identity(int k);

  const TableauRow& x_row(int q) const { return rows[q]; }
  const TableauRow& z_row(int q) const { return rows[k + q]; }

  // Conjugation update: this becomes tableau of (g . U).
  void prepend(const GateOp& g);

  bool is_symplectic() const;
  bool operator==(const CliffordTableau&) const = default;
};

// Exactly uniform over the Clifford group modulo global phase: a uniform
// draw from Sp(2k, F2) via the canonical transvection construction, plus 2k
// uniform sign bits.
CliffordTableau sample_uniform(int k, RngStream& rng);

// +/- sigma^{s'} with the sign folded into phase_exp (0 or 2).
PauliString conjugate_pauli(const CliffordTableau& t, const PauliString& p);

// Gate sequence over {H, S, CNOT, X, Z} whose composed matrix equals the
// tableau's unitary up to global phase; length O(k^2).
std::vector<GateOp> to_gates(const CliffordTableau& t);

// Applies the synthesized gate sequence amplitude-wise; O(|gates| 2^k).
DenseState apply_to_state(const CliffordTableau& t, const DenseState& state);

// Tableau of (t2 . t1) as unitaries.
CliffordTableau compose(const CliffordTableau& t2, const CliffordTableau& t1);

// Dense matrix (up to global phase), built from the gate synthesis.
Mat tableau_to_matrix(const CliffordTableau& t);

// Canonical 64-bit key of the class modulo global phase (for counting).
uint64_t tableau_key(const CliffordTableau& t);

}  // namespace paulispec

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

#include <string>
#include <vector>

#include "paulispec/clifford.hpp"
#include "paulispec/dense.hpp"
#include "paulispec/pauli.hpp"

namespace paulispec {
namespace zoo {

// H = sum_j h_j sigma^{s_j} with distinct phase-free words.
struct SparseHamiltonian {
  int n = 0;
  std::vector<std::pair<double, PauliString>> terms;

  double l1() const;  // L = sum |h_j|
  PauliMap to_map() const;
};

// U = prod_j exp(-i theta_j P_j); requires |theta_j| < pi/2.
struct RotationProduct {
  int n = 0;
  std::vector<std::pair<double, PauliString>> factors;

  double tan_sum() const;  // A = sum |tan theta_j|
};

// Named instances for the CLI and the test harness.
//   mcphase:          k qubits, phase phi on |1^k>
//   grover:           diffusion 2|+..+><+..+| - I on n qubits
//   phase-oracle:     I - 2|x><x| on n qubits
//   selective-phase:  I + (e^{i phi}-1) Pi for a stabilizer projector Pi
//   rotation-product / hamiltonian: built from the structs below
DenseOperator multi_controlled_phase(int k, double phi);
DenseOperator grover_diffusion(int n);
DenseOperator phase_oracle(int n, uint64_t x);
// Pi = prod_g (I+g)/2 from commuting independent generators, by sparse
// Pauli algebra (not unitary; the building block of the selective phase).
PauliMap stabilizer_projector(int n, const std::vector<PauliString>& generators);
DenseOperator selective_phase(int n, const std::vector<PauliString>& generators,
                              double phi);
DenseOperator build_rotation_product(const RotationProduct& rp);
// exp(-i t H) through the eigendecomposition of the Hermitian H.
DenseOperator evolve(const SparseHamiltonian& h, double t);

struct TailBound {
  uint64_t support_bound = 0;
  double eps_bound = 0.0;
};

// Support {products of <= k factor words} and the residual bound
// e^A A^{k+1}/(k+1)!; the true residual (by decompose) never exceeds it.
struct SubsetTail {
  TailBound bound;
  std::vector<uint64_t> support;  // S_k, ascending indices
};
SubsetTail subset_tail_bound(const RotationProduct& rp, int k);

// Degree-k Taylor truncation of exp(-i t H) by exact sparse multiplication,
// with the e^{|t|L}(|t|L)^{k+1}/(k+1)! residual bound.
struct TaylorTail {
  TailBound bound;
  PauliMap truncation;
};
TaylorTail taylor_tail_bound(const SparseHamiltonian& h, double t, int k);

struct L1Propagation {
  double l1_u = 0.0;
  double bound = 0.0;
};
// ||e^{iH}||_{1,P} <= e^L, checked against the dense exponential.
L1Propagation l1_propagation_check(const SparseHamiltonian& h);

// C U C^dagger; sparsity certificates are invariant under it.
DenseOperator clifford_conjugate(const DenseOperator& u, const CliffordTableau& c);

}  // namespace zoo
}  // namespace paulispec

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
#include <string>
#include <vector>

#include "paulispec/rng.hpp"

namespace paulispec {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Largest qubit count for which dense vectors/matrices may be allocated.
// Overridable through the PAULISPEC_DENSE_CAP environment variable.
int dense_cap();

// Complex amplitude vector over 2^k basis states. Qubit 0 is the most
// significant bit of the basis index.
struct DenseState {
  int k = 0;
  Vec amps;

  DenseState() = default;
  DenseState(int k_, Vec amps_);
  static DenseState zero_state(int k);
  static DenseState basis_state(int k, uint64_t index);

  double norm() const { return amps.norm(); }
  bool is_normalized(double tol = 1e-10) const;
};

struct DenseOperator {
  int k = 0;
  Mat matrix;

  DenseOperator() = default;
  DenseOperator(int k_, Mat m);
  static DenseOperator identity(int k);

  bool is_unitary(double tol = 1e-10) const;
};

enum class Gate : uint8_t { H, S, Sdg, X, Z, CNOT };

struct GateOp {
  Gate gate;
  int a = 0;   // target qubit (control for CNOT)
  int b = -1;  // CNOT target
};

// In-place application to a k-qubit amplitude vector.
void apply_gate(Vec& amps, int k, const GateOp& g);
void apply_gates(Vec& amps, int k, const std::vector<GateOp>& gates);
// Reversed, daggered sequence (used to evaluate V^dagger |b>).
void apply_gates_inverse(Vec& amps, int k, const std::vector<GateOp>& gates);

// Embeds op on the listed qubits (op qubit 0 binds to targets[0]).
DenseState apply(const DenseOperator& op, const DenseState& state,
                 const std::vector<int>& targets);

Mat gate_matrix(const GateOp& g, int k);
Mat gates_to_matrix(const std::vector<GateOp>& gates, int k);
std::string gate_name(Gate g);

// Haar-distributed unitary via Ginibre + QR with phase-fixed R diagonal.
Mat random_unitary(int k, RngStream& rng);
// Haar random pure state.
Vec random_state(int k, RngStream& rng);

}  // namespace paulispec

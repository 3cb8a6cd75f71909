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

#include <optional>

#include "paulispec/dense.hpp"
#include "paulispec/pauli.hpp"

namespace paulispec {
namespace lcu {

// Block encoding of U_hat = sum alpha_s sigma^s: m = ceil(log2 |support|)
// ancillas index the support in ascending base-4 order; the subnormalization
// is a = sum |alpha_s|.
struct LcuSpec {
  PauliMap coeffs;
  double a = 0.0;
  int m = 0;
  std::optional<double> gamma;  // known l1,P distance to a true unitary

  static LcuSpec from_map(const PauliMap& coeffs,
                          std::optional<double> gamma = std::nullopt);
};

// Prepare oracle A: |0^m> -> sum_s sqrt(|alpha_s|/a)|s>, completed to a
// unitary by the Householder reflection through target - e_0.
Mat build_prepare(const LcuSpec& spec);

// Select unitary sum_s |s><s| (x) (alpha_s/|alpha_s|) sigma^s; ancilla values
// beyond the support select the identity.
Mat build_select(const LcuSpec& spec);

// Full walk operator W = (A^dag (x) I) V (A (x) I) on m + n qubits.
Mat build_walk(const LcuSpec& spec);

// (<0^m| (x) I) W (|0^m> (x) I) == U_hat / a.
Mat effective_block(const LcuSpec& spec);

// Oblivious amplitude amplification: rounds applications of the iterate
// G = -W R W^dag R with R = I - 2(|0^m><0^m| (x) I); rounds = 0 returns W.
// Requires (1 + gamma)/a <= 1 when gamma is known.
Mat amplify(const LcuSpec& spec, int rounds);

// Round count placing sin((2r+1) asin(1/a)) near 1; exactly 1 for a = 2.
int suggested_rounds(double a);

// Input-averaged probability of measuring |0^m> on the ancillas after W,
// equal to ||U_hat||_{2,P}^2 / a^2 (1/a^2 when U_hat is unitary).
double success_probability(const LcuSpec& spec);

}  // namespace lcu
}  // namespace paulispec

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

#include "paulispec/dense.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace paulispec {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

int dense_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("PAULISPEC_DENSE_CAP")) {
      const int v = std::atoi(env);
      if (v >= 1 && v <= 30) return v;
    }
    return 12;
  }();
  return cap;
}

DenseState::DenseState(int k_, Vec amps_) : k(k_), amps(std::move(amps_)) {
  if (k < 1 || k > dense_cap()) throw std::invalid_argument("DenseState: bad qubit count");
  if (amps.size() != (int64_t{1} << k))
    throw std::invalid_argument("DenseState: amplitude length mismatch");
}

DenseState DenseState::zero_state(int k) { return basis_state(k, 0); }

DenseState DenseState::basis_state(int k, uint64_t index) {
  if (k < 1 || k > dense_cap()) throw std::invalid_argument("DenseState: bad qubit count");
  Vec v = Vec::Zero(int64_t{1} << k);
  v(static_cast<int64_t>(index)) = 1.0;
  return DenseState(k, std::move(v));
}

bool DenseState::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

DenseOperator::DenseOperator(int k_, Mat m) : k(k_), matrix(std::move(m)) {
  if (k < 1 || k > dense_cap()) throw std::invalid_argument("DenseOperator: bad qubit count");
  const int64_t dim = int64_t{1} << k;
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw std::invalid_argument("DenseOperator: matrix shape mismatch");
}

DenseOperator DenseOperator::identity(int k) {
  return DenseOperator(k, Mat::Identity(int64_t{1} << k, int64_t{1} << k));
}

bool DenseOperator::is_unitary(double tol) const {
  const Mat defect = matrix.adjoint() * matrix - Mat::Identity(matrix.rows(), matrix.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

void apply_gate(Vec& amps, int k, const GateOp& g) {
  const int64_t dim = int64_t{1} << k;
  const int64_t ma = int64_t{1} << (k - 1 - g.a);
  switch (g.gate) {
    case Gate::H: {
      for (int64_t i = 0; i < dim; ++i) {
        if (i & ma) continue;
        const cplx lo = amps(i), hi = amps(i | ma);
        amps(i) = (lo + hi) * kInvSqrt2;
        amps(i | ma) = (lo - hi) * kInvSqrt2;
      }
      break;
    }
    case Gate::S: {
      for (int64_t i = 0; i < dim; ++i)
        if (i & ma) amps(i) *= cplx(0, 1);
      break;
    }
    case Gate::Sdg: {
      for (int64_t i = 0; i < dim; ++i)
        if (i & ma) amps(i) *= cplx(0, -1);
      break;
    }
    case Gate::X: {
      for (int64_t i = 0; i < dim; ++i) {
        if (i & ma) continue;
        std::swap(amps(i), amps(i | ma));
      }
      break;
    }
    case Gate::Z: {
      for (int64_t i = 0; i < dim; ++i)
        if (i & ma) amps(i) = -amps(i);
      break;
    }
    case Gate::CNOT: {
      const int64_t mb = int64_t{1} << (k - 1 - g.b);
      for (int64_t i = 0; i < dim; ++i) {
        if ((i & ma) && !(i & mb)) std::swap(amps(i), amps(i | mb));
      }
      break;
    }
  }
}

void apply_gates(Vec& amps, int k, const std::vector<GateOp>& gates) {
  for (const GateOp& g : gates) apply_gate(amps, k, g);
}

void apply_gates_inverse(Vec& amps, int k, const std::vector<GateOp>& gates) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    GateOp g = *it;
    if (g.gate == Gate::S) g.gate = Gate::Sdg;
    else if (g.gate == Gate::Sdg) g.gate = Gate::S;
    apply_gate(amps, k, g);
  }
}

DenseState apply(const DenseOperator& op, const DenseState& state,
                 const std::vector<int>& targets) {
  const int t = op.k;
  if (static_cast<int>(targets.size()) != t)
    throw std::invalid_argument("apply: target count does not match operator");
  uint64_t seen = 0;
  for (int q : targets) {
    if (q < 0 || q >= state.k) throw std::invalid_argument("apply: target out of range");
    const uint64_t bit = uint64_t{1} << q;
    if (seen & bit) throw std::invalid_argument("apply: duplicate target");
    seen |= bit;
  }

  const int64_t dim = int64_t{1} << state.k;
  const int64_t sub = int64_t{1} << t;
  std::vector<int64_t> tmask(t);
  for (int j = 0; j < t; ++j) tmask[j] = int64_t{1} << (state.k - 1 - targets[j]);
  int64_t all_targets = 0;
  for (int64_t m : tmask) all_targets |= m;

  Vec out = Vec::Zero(dim);
  Vec in_block(sub);
  std::vector<int64_t> scatter(sub);
  for (int64_t base = 0; base < dim; ++base) {
    if (base & all_targets) continue;
    for (int64_t r = 0; r < sub; ++r) {
      int64_t idx = base;
      for (int j = 0; j < t; ++j)
        if (r & (int64_t{1} << (t - 1 - j))) idx |= tmask[j];
      scatter[r] = idx;
      in_block(r) = state.amps(idx);
    }
    const Vec out_block = op.matrix * in_block;
    for (int64_t r = 0; r < sub; ++r) out(scatter[r]) = out_block(r);
  }
  return DenseState(state.k, std::move(out));
}

Mat gate_matrix(const GateOp& g, int k) {
  const int64_t dim = int64_t{1} << k;
  Mat m(dim, dim);
  Vec col(dim);
  for (int64_t c = 0; c < dim; ++c) {
    col.setZero();
    col(c) = 1.0;
    apply_gate(col, k, g);
    m.col(c) = col;
  }
  return m;
}

Mat gates_to_matrix(const std::vector<GateOp>& gates, int k) {
  const int64_t dim = int64_t{1} << k;
  Mat m(dim, dim);
  Vec col(dim);
  for (int64_t c = 0; c < dim; ++c) {
    col.setZero();
    col(c) = 1.0;
    apply_gates(col, k, gates);
    m.col(c) = col;
  }
  return m;
}

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::Sdg: return "Sdg";
    case Gate::X: return "X";
    case Gate::Z: return "Z";
    case Gate::CNOT: return "CNOT";
  }
  return "?";
}

Mat random_unitary(int k, RngStream& rng) {
  const int64_t dim = int64_t{1} << k;
  Mat g(dim, dim);
  for (int64_t r = 0; r < dim; ++r)
    for (int64_t c = 0; c < dim; ++c)
      g(r, c) = cplx(rng.next_gaussian(), rng.next_gaussian());
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int64_t j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    q.col(j) *= (std::abs(d) == 0.0) ? cplx(1.0) : d / std::abs(d);
  }
  return q;
}

Vec random_state(int k, RngStream& rng) {
  const int64_t dim = int64_t{1} << k;
  Vec v(dim);
  for (int64_t i = 0; i < dim; ++i) v(i) = cplx(rng.next_gaussian(), rng.next_gaussian());
  v.normalize();
  return v;
}

}  // namespace paulispec

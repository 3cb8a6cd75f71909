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

#include "paulispec/zoo.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace paulispec {
namespace zoo {

namespace {

void check_unitary(const DenseOperator& u, const char* what) {
  if (!u.is_unitary())
    throw std::logic_error(std::string(what) + ": constructed operator not unitary");
}

uint64_t binom(uint64_t m, uint64_t r) {
  if (r > m) return 0;
  uint64_t acc = 1;
  for (uint64_t i = 0; i < r; ++i) acc = acc * (m - i) / (i + 1);
  return acc;
}

double factorial(int k) {
  double acc = 1.0;
  for (int i = 2; i <= k; ++i) acc *= i;
  return acc;
}

}  // namespace

double SparseHamiltonian::l1() const {
  double acc = 0.0;
  for (const auto& [h, p] : terms) acc += std::abs(h);
  return acc;
}

PauliMap SparseHamiltonian::to_map() const {
  PauliMap map(n);
  std::set<uint64_t> seen;
  for (const auto& [h, p] : terms) {
    if (p.n != n) throw std::invalid_argument("SparseHamiltonian: term size mismatch");
    if (!seen.insert(p.index()).second)
      throw std::invalid_argument("SparseHamiltonian: duplicate Pauli term");
    map.add(p.index(), h);
  }
  return map;
}

double RotationProduct::tan_sum() const {
  double acc = 0.0;
  for (const auto& [theta, p] : factors) {
    if (std::abs(theta) >= std::numbers::pi / 2)
      throw std::invalid_argument("RotationProduct: |theta| must be < pi/2");
    acc += std::abs(std::tan(theta));
  }
  return acc;
}

DenseOperator multi_controlled_phase(int k, double phi) {
  const int64_t dim = int64_t{1} << k;
  Mat m = Mat::Identity(dim, dim);
  m(dim - 1, dim - 1) = std::exp(cplx(0, phi));
  DenseOperator u(k, std::move(m));
  check_unitary(u, "multi_controlled_phase");
  return u;
}

DenseOperator grover_diffusion(int n) {
  const int64_t dim = int64_t{1} << n;
  const double w = 2.0 / static_cast<double>(dim);
  Mat m = Mat::Constant(dim, dim, cplx(w, 0));
  m -= Mat::Identity(dim, dim);
  DenseOperator u(n, std::move(m));
  check_unitary(u, "grover_diffusion");
  return u;
}

DenseOperator phase_oracle(int n, uint64_t x) {
  const int64_t dim = int64_t{1} << n;
  if (x >= static_cast<uint64_t>(dim))
    throw std::invalid_argument("phase_oracle: marked string out of range");
  Mat m = Mat::Identity(dim, dim);
  m(x, x) = -1.0;
  DenseOperator u(n, std::move(m));
  check_unitary(u, "phase_oracle");
  return u;
}

PauliMap stabilizer_projector(int n, const std::vector<PauliString>& generators) {
  // generators must commute pairwise and be independent over F2.
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].n != n)
      throw std::invalid_argument("stabilizer_projector: generator size mismatch");
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].commutes_with(generators[j]))
        throw std::invalid_argument("stabilizer_projector: generators must commute");
  }
  uint64_t slots[64] = {};
  for (const auto& g : generators) {
    uint64_t v = (g.x << 32) | g.z;
    while (v != 0) {
      const int h = 63 - std::countl_zero(v);
      if (slots[h] == 0) { slots[h] = v; break; }
      v ^= slots[h];
    }
    if (v == 0)
      throw std::invalid_argument("stabilizer_projector: generators not independent");
  }

  PauliMap pi(n);
  pi.add(0, 1.0);
  for (const auto& g : generators) {
    PauliMap gmap(n);
    gmap.add(g.index(), 1.0);
    pi = map_scale(map_add(pi, map_mul(pi, gmap)), 0.5);
  }
  return pi;
}

DenseOperator selective_phase(int n, const std::vector<PauliString>& generators,
                              double phi) {
  const PauliMap pi = stabilizer_projector(n, generators);
  PauliMap u = map_scale(pi, std::exp(cplx(0, phi)) - 1.0);
  u.add(0, 1.0);
  DenseOperator out(n, synthesize(u));
  check_unitary(out, "selective_phase");
  return out;
}

DenseOperator build_rotation_product(const RotationProduct& rp) {
  const int64_t dim = int64_t{1} << rp.n;
  Mat m = Mat::Identity(dim, dim);
  for (const auto& [theta, p] : rp.factors) {
    if (p.n != rp.n) throw std::invalid_argument("rotation product: factor size mismatch");
    if (std::abs(theta) >= std::numbers::pi / 2)
      throw std::invalid_argument("rotation product: |theta| must be < pi/2");
    const Mat factor = std::cos(theta) * Mat::Identity(dim, dim) -
                       cplx(0, 1) * std::sin(theta) * p.matrix();
    m = m * factor;
  }
  DenseOperator u(rp.n, std::move(m));
  check_unitary(u, "rotation_product");
  return u;
}

DenseOperator evolve(const SparseHamiltonian& h, double t) {
  const Mat hm = synthesize(h.to_map());
  Eigen::SelfAdjointEigenSolver<Mat> es(hm);
  const auto& vals = es.eigenvalues();
  Vec phases(vals.size());
  for (int64_t i = 0; i < vals.size(); ++i) phases(i) = std::exp(cplx(0, -t * vals(i)));
  Mat u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  DenseOperator out(h.n, std::move(u));
  check_unitary(out, "evolve");
  return out;
}

SubsetTail subset_tail_bound(const RotationProduct& rp, int k) {
  if (k < 0) throw std::invalid_argument("subset_tail_bound: k must be >= 0");
  const double a = rp.tan_sum();
  SubsetTail out;
  const uint64_t m = rp.factors.size();
  for (int r = 0; r <= k; ++r) out.bound.support_bound += binom(m, r);
  out.bound.eps_bound = std::exp(a) * std::pow(a, k + 1) / factorial(k + 1);

  // S_k: words reachable as products of <= k factors, phases dropped,
  // collisions merged.
  std::set<std::pair<uint64_t, uint64_t>> masks = {{0, 0}};
  std::set<std::pair<uint64_t, uint64_t>> frontier = masks;
  for (int r = 1; r <= k && r <= static_cast<int>(m); ++r) {
    std::set<std::pair<uint64_t, uint64_t>> next;
    for (const auto& [x, z] : frontier)
      for (const auto& [theta, p] : rp.factors) next.insert({x ^ p.x, z ^ p.z});
    masks.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& [x, z] : masks)
    out.support.push_back(PauliString{rp.n, x, z, 0}.index());
  std::sort(out.support.begin(), out.support.end());
  return out;
}

TaylorTail taylor_tail_bound(const SparseHamiltonian& h, double t, int k) {
  if (k < 0) throw std::invalid_argument("taylor_tail_bound: k must be >= 0");
  const double tl = std::abs(t) * h.l1();
  TaylorTail out;
  uint64_t m_pow = 1;
  for (int l = 0; l <= k; ++l) {
    out.bound.support_bound += m_pow;
    m_pow *= h.terms.size();
  }
  out.bound.eps_bound = std::exp(tl) * std::pow(tl, k + 1) / factorial(k + 1);

  const PauliMap hmap = h.to_map();
  PauliMap power(h.n);
  power.add(0, 1.0);
  out.truncation = PauliMap(h.n);
  cplx coeff = 1.0;
  for (int l = 0; l <= k; ++l) {
    if (l > 0) {
      power = map_mul(power, hmap);
      coeff *= cplx(0, -t) / static_cast<double>(l);
    }
    out.truncation = map_add(out.truncation, power, coeff);
  }
  return out;
}

L1Propagation l1_propagation_check(const SparseHamiltonian& h) {
  const DenseOperator u = evolve(h, -1.0);  // e^{+iH}
  L1Propagation out;
  out.l1_u = norms(decompose(u.matrix)).l1;
  out.bound = std::exp(h.l1());
  if (out.l1_u > out.bound + 1e-9)
    throw std::logic_error("l1_propagation_check: bound violated");
  return out;
}

DenseOperator clifford_conjugate(const DenseOperator& u, const CliffordTableau& c) {
  if (u.k != c.k) throw std::invalid_argument("clifford_conjugate: dimension mismatch");
  const Mat cm = tableau_to_matrix(c);
  return DenseOperator(u.k, cm * u.matrix * cm.adjoint());
}

}  // namespace zoo
}  // namespace paulispec

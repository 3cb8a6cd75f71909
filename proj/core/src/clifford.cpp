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

#include "paulispec/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace paulispec {

namespace {

inline int pop(uint64_t v) { return std::popcount(v); }

}  // namespace

CliffordTableau CliffordTableau::identity(int k) {
  CliffordTableau t;
  t.k = k;
  t.rows.resize(2 * k);
  for (int q = 0; q < k; ++q) {
    const uint64_t bit = uint64_t{1} << (k - 1 - q);
    t.rows[q] = TableauRow{bit, 0, false};
    t.rows[k + q] = TableauRow{0, bit, false};
  }
  return t;
}

void CliffordTableau::prepend(const GateOp& g) {
  const uint64_t ma = uint64_t{1} << (k - 1 - g.a);
  switch (g.gate) {
    case Gate::H:
      for (auto& r : rows) {
        const bool xa = r.x & ma, za = r.z & ma;
        r.neg ^= xa && za;
        if (xa != za) { r.x ^= ma; r.z ^= ma; }
      }
      break;
    case Gate::S:
      for (auto& r : rows) {
        const bool xa = r.x & ma, za = r.z & ma;
        r.neg ^= xa && za;
        if (xa) r.z ^= ma;
      }
      break;
    case Gate::Sdg:
      for (auto& r : rows) {
        const bool xa = r.x & ma, za = r.z & ma;
        r.neg ^= xa && !za;
        if (xa) r.z ^= ma;
      }
      break;
    case Gate::X:
      for (auto& r : rows) r.neg ^= (r.z & ma) != 0;
      break;
    case Gate::Z:
      for (auto& r : rows) r.neg ^= (r.x & ma) != 0;
      break;
    case Gate::CNOT: {
      const uint64_t mb = uint64_t{1} << (k - 1 - g.b);
      for (auto& r : rows) {
        const bool xa = r.x & ma, za = r.z & ma;
        const bool xb = r.x & mb, zb = r.z & mb;
        r.neg ^= xa && zb && (xb == za);
        if (xa) r.x ^= mb;
        if (zb) r.z ^= ma;
      }
      break;
    }
  }
}

bool CliffordTableau::is_symplectic() const {
  // Images must keep the generator commutation pattern.
  auto sym = [](const TableauRow& a, const TableauRow& b) {
    return (pop(a.x & b.z) + pop(a.z & b.x)) & 1;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (sym(rows[i], rows[j]) != 0) return false;
      if (sym(rows[k + i], rows[k + j]) != 0) return false;
      if (sym(rows[i], rows[k + j]) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exactly uniform symplectic sampling via the transvection canonical form.
// Vectors are interleaved bit strings: bit 2i is the x part and bit 2i+1 the
// z part of pair i; <a,b> = sum_i a_x b_z + a_z b_x mod 2. Each recursion
// level consumes one uniform nonzero vector (4^j - 1 choices) and 2j-1
// uniform bits, which together enumerate Sp(2j,F2) exactly once.
// ---------------------------------------------------------------------------
namespace {

using SpVec = uint32_t;

inline int sp_inner(SpVec a, SpVec b) {
  const SpVec ax = a & 0x55555555u, az = (a >> 1) & 0x55555555u;
  const SpVec bx = b & 0x55555555u, bz = (b >> 1) & 0x55555555u;
  return (std::popcount(ax & bz) + std::popcount(az & bx)) & 1;
}

inline SpVec transvect(SpVec h, SpVec v) { return sp_inner(h, v) ? (v ^ h) : v; }

struct TransvectPair {
  SpVec h0 = 0;
  SpVec h1 = 0;
};

// h0, h1 with Z_h0 Z_h1 x = y (transvections commute on this orbit).
TransvectPair find_transvection(SpVec x, SpVec y, int j) {
  TransvectPair out;
  if (x == y) return out;
  if (sp_inner(x, y)) {
    out.h0 = x ^ y;
    return out;
  }
  SpVec z = 0;
  for (int i = 0; i < j; ++i) {
    const SpVec xi = (x >> (2 * i)) & 3u;
    const SpVec yi = (y >> (2 * i)) & 3u;
    if (xi != 0 && yi != 0) {
      SpVec zi = xi ^ yi;
      if (zi == 0) {
        zi = 2u;                       // z part
        if ((xi & 1u) != (xi >> 1)) zi |= 1u;
      }
      z = zi << (2 * i);
      out.h0 = x ^ z;
      out.h1 = y ^ z;
      return out;
    }
  }
  for (int i = 0; i < j; ++i) {
    const SpVec xi = (x >> (2 * i)) & 3u;
    const SpVec yi = (y >> (2 * i)) & 3u;
    if (xi != 0 && yi == 0) {
      SpVec zi;
      if ((xi & 1u) == (xi >> 1)) zi = 2u;
      else zi = static_cast<SpVec>(((xi & 1u) << 1) | (xi >> 1));
      z |= zi << (2 * i);
      break;
    }
  }
  for (int i = 0; i < j; ++i) {
    const SpVec xi = (x >> (2 * i)) & 3u;
    const SpVec yi = (y >> (2 * i)) & 3u;
    if (xi == 0 && yi != 0) {
      SpVec zi;
      if ((yi & 1u) == (yi >> 1)) zi = 2u;
      else zi = static_cast<SpVec>(((yi & 1u) << 1) | (yi >> 1));
      z |= zi << (2 * i);
      break;
    }
  }
  out.h0 = x ^ z;
  out.h1 = y ^ z;
  return out;
}

std::vector<SpVec> sample_symplectic(int j, RngStream& rng) {
  if (j == 0) return {};
  const uint32_t nn = 2 * static_cast<uint32_t>(j);
  const uint64_t nonzero = (uint64_t{1} << nn) - 1;
  const SpVec f1 = static_cast<SpVec>(1 + rng.next_below(nonzero));
  const uint64_t bits = rng.next_below(uint64_t{1} << (nn - 1));

  std::vector<SpVec> inner = sample_symplectic(j - 1, rng);
  std::vector<SpVec> g(2 * j);
  g[0] = 1u;  // e1
  g[1] = 2u;  // e2
  for (size_t r = 0; r < inner.size(); ++r) g[2 + r] = inner[r] << 2;

  const TransvectPair t = find_transvection(1u, f1, j);
  SpVec eprime = 1u;
  for (uint32_t pos = 2; pos < nn; ++pos)
    if ((bits >> (pos - 1)) & 1) eprime |= SpVec{1} << pos;
  const SpVec h0 = transvect(t.h0, transvect(t.h1, eprime));
  const bool use_f1 = (bits & 1) == 0;
  for (auto& row : g) {
    row = transvect(t.h0, row);
    row = transvect(t.h1, row);
    row = transvect(h0, row);
    if (use_f1) row = transvect(f1, row);
  }
  return g;
}

}  // namespace

CliffordTableau sample_uniform(int k, RngStream& rng) {
  if (k < 1 || k > 16) throw std::invalid_argument("sample_uniform: bad qubit count");
  const std::vector<SpVec> sp = sample_symplectic(k, rng);
  CliffordTableau t;
  t.k = k;
  t.rows.resize(2 * k);
  for (int q = 0; q < k; ++q) {
    for (int half = 0; half < 2; ++half) {
      const SpVec v = sp[2 * q + half];
      TableauRow row;
      for (int i = 0; i < k; ++i) {
        const uint64_t bit = uint64_t{1} << (k - 1 - i);
        if ((v >> (2 * i)) & 1) row.x |= bit;
        if ((v >> (2 * i + 1)) & 1) row.z |= bit;
      }
      row.neg = rng.next_bool();
      t.rows[half == 0 ? q : k + q] = row;
    }
  }
  return t;
}

PauliString conjugate_pauli(const CliffordTableau& t, const PauliString& p) {
  if (p.n != t.k) throw std::invalid_argument("conjugate_pauli: dimension mismatch");
  // sigma^s = i^{|x&z|} (prod_j X_j^{x_j}) (prod_j Z_j^{z_j}); conjugation is
  // a homomorphism, so multiply the generator images in that order.
  PauliString acc = PauliString::identity(t.k);
  acc.phase_exp = (p.phase_exp + pop(p.x & p.z)) % 4;
  for (int q = 0; q < t.k; ++q) {
    const uint64_t bit = uint64_t{1} << (t.k - 1 - q);
    if (p.x & bit) {
      const TableauRow& r = t.x_row(q);
      acc = pauli_mul(acc, PauliString{t.k, r.x, r.z, r.neg ? 2 : 0});
    }
  }
  for (int q = 0; q < t.k; ++q) {
    const uint64_t bit = uint64_t{1} << (t.k - 1 - q);
    if (p.z & bit) {
      const TableauRow& r = t.z_row(q);
      acc = pauli_mul(acc, PauliString{t.k, r.x, r.z, r.neg ? 2 : 0});
    }
  }
  // Fold the Hermitian normalization of the result back out; a Clifford image
  // of a Hermitian word is +/- a Hermitian word, so the leftover must be even.
  acc.phase_exp = ((acc.phase_exp - pop(acc.x & acc.z)) % 4 + 4) % 4;
  if (acc.phase_exp % 2 != 0)
    throw std::logic_error("conjugate_pauli: odd phase, tableau corrupt");
  return acc;
}

std::vector<GateOp> to_gates(const CliffordTableau& t) {
  const int k = t.k;
  CliffordTableau w = t;
  std::vector<GateOp> applied;
  auto emit = [&](GateOp g) {
    w.prepend(g);
    applied.push_back(g);
  };
  auto bit = [&](int q) { return uint64_t{1} << (k - 1 - q); };

  for (int q = 0; q < k; ++q) {
    // Reduce the X_q image to +/- X_q. Rows never have support below q here.
    {
      bool has_x = false;
      for (int c = q; c < k && !has_x; ++c) has_x = (w.x_row(q).x & bit(c)) != 0;
      if (!has_x) {
        for (int c = q; c < k; ++c)
          if (w.x_row(q).z & bit(c)) { emit({Gate::H, c}); break; }
      }
      int pivot = -1;
      for (int c = q; c < k; ++c)
        if (w.x_row(q).x & bit(c)) { pivot = c; break; }
      if (pivot != q) {
        emit({Gate::CNOT, q, pivot});
        emit({Gate::CNOT, pivot, q});
        emit({Gate::CNOT, q, pivot});
      }
      for (int c = q + 1; c < k; ++c)
        if (w.x_row(q).x & bit(c)) emit({Gate::CNOT, q, c});
      if (w.x_row(q).z & bit(q)) emit({Gate::S, q});
      for (int c = q + 1; c < k; ++c)
        if (w.x_row(q).z & bit(c)) {  // CZ(q,c) as H.CNOT.H
          emit({Gate::H, c});
          emit({Gate::CNOT, q, c});
          emit({Gate::H, c});
        }
    }
    // Reduce the Z_q image to +/- Z_q; it anticommutes with X_q, so its z
    // part at q is already set. Work in the H(q) frame where X_q image
    // becomes Z_q, which every op below fixes.
    {
      const TableauRow& b = w.z_row(q);
      if (b.x != 0 || b.z != bit(q)) {
        emit({Gate::H, q});
        for (int c = q + 1; c < k; ++c)
          if (w.z_row(q).x & bit(c)) emit({Gate::CNOT, q, c});
        if (w.z_row(q).z & bit(q)) emit({Gate::S, q});
        for (int c = q + 1; c < k; ++c)
          if (w.z_row(q).z & bit(c)) {
            emit({Gate::H, c});
            emit({Gate::CNOT, q, c});
            emit({Gate::H, c});
          }
        emit({Gate::H, q});
      }
    }
    if (w.x_row(q).neg) emit({Gate::Z, q});
    if (w.z_row(q).neg) emit({Gate::X, q});
  }
  if (!(w == CliffordTableau::identity(k)))
    throw std::logic_error("to_gates: elimination did not reach identity");

  // applied composes with the input as (a_m ... a_1) U = I, so
  // U = a_1^dag ... a_m^dag; emit reversed daggers, S^dag as Z then S.
  std::vector<GateOp> gates;
  gates.reserve(applied.size() + 4);
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    if (it->gate == Gate::S) {
      gates.push_back({Gate::Z, it->a});
      gates.push_back({Gate::S, it->a});
    } else {
      gates.push_back(*it);
    }
  }
  return gates;
}

DenseState apply_to_state(const CliffordTableau& t, const DenseState& state) {
  if (t.k != state.k) throw std::invalid_argument("apply_to_state: dimension mismatch");
  DenseState out = state;
  const std::vector<GateOp> gates = to_gates(t);
  apply_gates(out.amps, out.k, gates);
  return out;
}

CliffordTableau compose(const CliffordTableau& t2, const CliffordTableau& t1) {
  if (t2.k != t1.k) throw std::invalid_argument("compose: dimension mismatch");
  CliffordTableau out;
  out.k = t1.k;
  out.rows.resize(2 * t1.k);
  for (int r = 0; r < 2 * t1.k; ++r) {
    const TableauRow& row = t1.rows[r];
    PauliString p{t1.k, row.x, row.z, row.neg ? 2 : 0};
    const PauliString img = conjugate_pauli(t2, p);
    out.rows[r] = TableauRow{img.x, img.z, img.phase_exp == 2};
  }
  return out;
}

Mat tableau_to_matrix(const CliffordTableau& t) {
  return gates_to_matrix(to_gates(t), t.k);
}

uint64_t tableau_key(const CliffordTableau& t) {
  auto mix = [](uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  uint64_t h = static_cast<uint64_t>(t.k);
  for (const auto& r : t.rows) {
    h = mix(h, r.x);
    h = mix(h, r.z);
    h = mix(h, r.neg ? 1 : 0);
  }
  return h;
}

}  // namespace paulispec

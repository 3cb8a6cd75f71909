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

#include "paulispec/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "paulispec/dense.hpp"
#include "paulispec/parallel.hpp"

namespace paulispec {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline int pop(uint64_t v) { return std::popcount(v); }

// digit -> (x,z) and back
constexpr int kDigitX[4] = {0, 1, 1, 0};
constexpr int kDigitZ[4] = {0, 0, 1, 1};
constexpr char kDigitChar[4] = {'I', 'X', 'Y', 'Z'};

inline int digit_of(int xb, int zb) {
  static constexpr int table[2][2] = {{0, 3}, {1, 2}};
  return table[xb][zb];
}

}  // namespace

PauliString PauliString::from_index(int n, uint64_t index) {
  if (n < 1 || n > 31) throw std::invalid_argument("PauliString: bad qubit count");
  if (index >> (2 * n)) throw std::invalid_argument("PauliString: index out of range");
  PauliString p{n, 0, 0, 0};
  for (int pos = 0; pos < n; ++pos) {
    const int d = static_cast<int>((index >> (2 * pos)) & 3);
    if (kDigitX[d]) p.x |= uint64_t{1} << pos;
    if (kDigitZ[d]) p.z |= uint64_t{1} << pos;
  }
  return p;
}

PauliString PauliString::from_text(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > 31) throw std::invalid_argument("PauliString: bad text length");
  PauliString p{n, 0, 0, 0};
  for (int j = 0; j < n; ++j) {
    const int pos = n - 1 - j;  // qubit j lives at bit position n-1-j
    switch (text[j]) {
      case 'I': break;
      case 'X': p.x |= uint64_t{1} << pos; break;
      case 'Y': p.x |= uint64_t{1} << pos; p.z |= uint64_t{1} << pos; break;
      case 'Z': p.z |= uint64_t{1} << pos; break;
      default: throw std::invalid_argument("PauliString: bad character in text form");
    }
  }
  return p;
}

PauliString PauliString::single(int n, int qubit, char letter) {
  std::string text(n, 'I');
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("PauliString: qubit out of range");
  text[qubit] = letter;
  return from_text(text);
}

uint64_t PauliString::index() const {
  uint64_t idx = 0;
  for (int pos = 0; pos < n; ++pos) {
    const int xb = static_cast<int>((x >> pos) & 1);
    const int zb = static_cast<int>((z >> pos) & 1);
    idx |= static_cast<uint64_t>(digit_of(xb, zb)) << (2 * pos);
  }
  return idx;
}

std::string PauliString::text() const {
  std::string out(n, 'I');
  for (int j = 0; j < n; ++j) {
    const int pos = n - 1 - j;
    const int xb = static_cast<int>((x >> pos) & 1);
    const int zb = static_cast<int>((z >> pos) & 1);
    out[j] = kDigitChar[digit_of(xb, zb)];
  }
  return out;
}

Mat PauliString::matrix() const {
  const int64_t dim = int64_t{1} << n;
  Mat m = Mat::Zero(dim, dim);
  const cplx front = kIPow[(pop(x & z) + phase_exp) % 4];
  for (int64_t b = 0; b < dim; ++b) {
    const int64_t row = b ^ static_cast<int64_t>(x);
    const double sign = (pop(z & static_cast<uint64_t>(b)) & 1) ? -1.0 : 1.0;
    m(row, b) = front * sign;
  }
  return m;
}

int PauliString::weight() const { return pop(x | z); }

bool PauliString::commutes_with(const PauliString& other) const {
  return ((pop(x & other.z) + pop(z & other.x)) & 1) == 0;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("pauli_mul: dimension mismatch");
  PauliString c{a.n, a.x ^ b.x, a.z ^ b.z, 0};
  // In X^x Z^z form: sigma^s = i^{|x&z|} X^x Z^z and Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1.
  int ph = a.phase_exp + b.phase_exp;
  ph += pop(a.x & a.z) + pop(b.x & b.z) + 2 * pop(a.z & b.x);
  ph -= pop(c.x & c.z);
  c.phase_exp = ((ph % 4) + 4) % 4;
  return c;
}

void PauliMap::set(uint64_t index, cplx value) {
  if (value == cplx{0.0, 0.0}) {
    entries.erase(index);
  } else {
    entries[index] = value;
  }
}

void PauliMap::add(uint64_t index, cplx value) {
  auto it = entries.find(index);
  if (it == entries.end()) {
    if (value != cplx{0.0, 0.0}) entries.emplace(index, value);
    return;
  }
  it->second += value;
  if (it->second == cplx{0.0, 0.0}) entries.erase(it);
}

cplx PauliMap::at(uint64_t index) const {
  auto it = entries.find(index);
  return it == entries.end() ? cplx{0.0, 0.0} : it->second;
}

void PauliMap::prune(double threshold) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (std::abs(it->second) < threshold) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
}

PauliNorms norms(const PauliMap& coeffs) {
  PauliNorms out;
  double sq = 0.0;
  for (const auto& [idx, a] : coeffs.entries) {
    const double m = std::abs(a);
    out.l1 += m;
    sq += m * m;
    out.linf = std::max(out.linf, m);
  }
  out.l2 = std::sqrt(sq);
  return out;
}

PauliMap decompose(const Mat& op) {
  const int64_t dim = op.rows();
  if (dim != op.cols()) throw std::invalid_argument("decompose: operator not square");
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("decompose: dimension not a power of two");
  const int n = std::countr_zero(static_cast<uint64_t>(dim));
  if (n > dense_cap())
    throw std::invalid_argument("decompose: qubit count exceeds dense cap");

  const uint64_t total = uint64_t{1} << (2 * n);
  const double inv = 1.0 / static_cast<double>(dim);
  PauliMap result(n);

  // Trace evaluations are independent; chunks merge in index order so the
  // result is identical for any worker count.
  const uint64_t chunk = 4096;
  const uint64_t nchunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<std::pair<uint64_t, cplx>>> parts(nchunks);
  parallel_for(nchunks, [&](uint64_t ci) {
    auto& local = parts[ci];
    const uint64_t lo = ci * chunk;
    const uint64_t hi = std::min(total, lo + chunk);
    for (uint64_t s = lo; s < hi; ++s) {
      const PauliString p = PauliString::from_index(n, s);
      cplx tr = 0.0;
      for (int64_t d = 0; d < dim; ++d) {
        const double sign = (pop(p.z & static_cast<uint64_t>(d)) & 1) ? -1.0 : 1.0;
        tr += sign * op(d, d ^ static_cast<int64_t>(p.x));
      }
      const cplx alpha = kIPow[pop(p.x & p.z) % 4] * tr * inv;
      if (std::abs(alpha) >= kDecomposePrune) local.emplace_back(s, alpha);
    }
  }, nchunks > 4 ? 0 : 1);
  for (const auto& part : parts)
    for (const auto& [s, alpha] : part) result.entries.emplace(s, alpha);
  return result;
}

Mat synthesize(const PauliMap& coeffs) {
  const int n = coeffs.n;
  if (n < 1) throw std::invalid_argument("synthesize: empty map");
  if (n > dense_cap())
    throw std::invalid_argument("synthesize: qubit count exceeds dense cap");
  const int64_t dim = int64_t{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [s, alpha] : coeffs.entries) {
    const PauliString p = PauliString::from_index(n, s);
    const cplx front = alpha * kIPow[pop(p.x & p.z) % 4];
    for (int64_t b = 0; b < dim; ++b) {
      const double sign = (pop(p.z & static_cast<uint64_t>(b)) & 1) ? -1.0 : 1.0;
      m(b ^ static_cast<int64_t>(p.x), b) += front * sign;
    }
  }
  return m;
}

SparsityCertificate nearly_sparse_certificate(const PauliMap& coeffs, uint64_t s) {
  std::vector<std::pair<uint64_t, double>> mags;
  mags.reserve(coeffs.entries.size());
  for (const auto& [idx, a] : coeffs.entries) mags.emplace_back(idx, std::abs(a));
  std::sort(mags.begin(), mags.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;  // ties broken by ascending index
  });
  SparsityCertificate cert;
  const size_t keep = std::min<size_t>(s, mags.size());
  for (size_t i = 0; i < keep; ++i) cert.support.push_back(mags[i].first);
  for (size_t i = keep; i < mags.size(); ++i) cert.residual_l1 += mags[i].second;
  std::sort(cert.support.begin(), cert.support.end());
  return cert;
}

PauliMap map_mul(const PauliMap& a, const PauliMap& b, double prune) {
  if (a.n != b.n) throw std::invalid_argument("map_mul: dimension mismatch");
  PauliMap out(a.n);
  for (const auto& [ia, va] : a.entries) {
    const PauliString pa = PauliString::from_index(a.n, ia);
    for (const auto& [ib, vb] : b.entries) {
      const PauliString pb = PauliString::from_index(b.n, ib);
      const PauliString pc = pauli_mul(pa, pb);
      out.add(pc.index(), va * vb * kIPow[pc.phase_exp]);
    }
  }
  out.prune(prune);
  return out;
}

PauliMap map_add(const PauliMap& a, const PauliMap& b, cplx scale_b) {
  if (a.n != b.n) throw std::invalid_argument("map_add: dimension mismatch");
  PauliMap out = a;
  for (const auto& [ib, vb] : b.entries) out.add(ib, vb * scale_b);
  return out;
}

PauliMap map_scale(const PauliMap& a, cplx scale) {
  PauliMap out(a.n);
  if (scale == cplx{0.0, 0.0}) return out;
  for (const auto& [i, v] : a.entries) out.entries.emplace(i, v * scale);
  return out;
}

}  // namespace paulispec

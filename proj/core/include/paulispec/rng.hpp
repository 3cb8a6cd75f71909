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

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace paulispec {

// Counter-based generator (SplittableRandom construction on the splitmix64
// finalizer). Streams are addressed by (seed, name, substream indices), so
// independent subsystems and parallel shot blocks draw from disjoint streams
// regardless of scheduling. Draw sequences depend only on the stream address.
class RngStream {
 public:
  RngStream() : key_(0) {}
  RngStream(uint64_t seed, std::string_view name)
      : key_(mix(mix(seed) ^ fnv1a(name))), name_(name) {}

  // Independent child stream; children of distinct indices never collide.
  RngStream substream(uint64_t index) const {
    RngStream child;
    child.key_ = mix(key_ ^ mix(index + 0x715bd4f7c7430a1bULL));
    child.name_ = name_;
    return child;
  }

  uint64_t next_u64() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix(key_ ^ counter_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., bound-1}; exact via rejection.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // Standard normal via Marsaglia polar; one value per call, no cache, so the
  // draw count stays a pure function of the call count.
  double next_gaussian() {
    for (;;) {
      const double u = 2.0 * next_double() - 1.0;
      const double v = 2.0 * next_double() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

  const std::string& name() const { return name_; }
  uint64_t key() const { return key_; }

 private:
  static constexpr uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  uint64_t key_;
  uint64_t counter_ = 0;
  std::string name_;
};

}  // namespace paulispec

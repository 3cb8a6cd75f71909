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

#include <doctest.h>

#include "paulispec/io.hpp"

using namespace paulispec;

TEST_SUITE_BEGIN("io");

TEST_CASE("coefficient files round-trip random maps exactly") {
  RngStream rng(1, "io");
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(3));
    PauliMap map(n);
    const int terms = 1 + static_cast<int>(rng.next_below(6));
    while (static_cast<int>(map.size()) < terms)
      map.set(rng.next_below(uint64_t{1} << (2 * n)),
              cplx(rng.next_gaussian(), rng.next_gaussian()));
    const PauliMap back = io::coeffs_from_jsonl(io::coeffs_to_jsonl(map));
    REQUIRE(back.n == map.n);
    REQUIRE(back.size() == map.size());
    for (const auto& [idx, v] : map.entries) CHECK(back.at(idx) == v);
  }
}

TEST_CASE("coefficient text format is the documented shape") {
  PauliMap map(3);
  map.set(PauliString::from_text("XIZ").index(), cplx(0.5, -0.25));
  const std::string text = io::coeffs_to_jsonl(map);
  CHECK(text.find("{\"n\":3}") != std::string::npos);
  CHECK(text.find("\"pauli\":\"XIZ\"") != std::string::npos);
  CHECK(text.find("\"re\":0.5") != std::string::npos);
  CHECK(text.find("\"im\":-0.25") != std::string::npos);
}

TEST_CASE("identical maps serialize byte-identically") {
  PauliMap a(2), b(2);
  a.set(5, cplx(0.1, 0.2));
  a.set(9, cplx(-0.3, 0));
  b.set(9, cplx(-0.3, 0));
  b.set(5, cplx(0.1, 0.2));
  CHECK(io::coeffs_to_jsonl(a) == io::coeffs_to_jsonl(b));
}

TEST_CASE("tableau serialization round-trips") {
  RngStream rng(2, "tabio");
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(4));
    const CliffordTableau t = sample_uniform(k, rng);
    const CliffordTableau back = io::tableau_from_json(io::tableau_to_json(t));
    CHECK(back == t);
  }
}

TEST_CASE("snapshot archives round-trip and keep the header") {
  const DenseState j = choi_state(DenseOperator::identity(1));
  RngStream rng(3, "snapio");
  const auto snaps = shadows::collect(j, 25, rng);
  const std::string text = io::snapshots_to_jsonl(2, 77, "shadow", snaps);
  int k = 0;
  const auto back = io::snapshots_from_jsonl(text, &k);
  CHECK(k == 2);
  REQUIRE(back.size() == snaps.size());
  for (size_t i = 0; i < snaps.size(); ++i) {
    CHECK(back[i].tableau == snaps[i].tableau);
    CHECK(back[i].outcome == snaps[i].outcome);
    CHECK(back[i].stream_index == snaps[i].stream_index);
    // Re-evaluation from the archive gives identical estimates.
    CHECK(shadows::eval_snapshot(back[i], shadows::BellObservable::m(0)) ==
          shadows::eval_snapshot(snaps[i], shadows::BellObservable::m(0)));
  }
}

TEST_CASE("shot logs carry seed, stream, and text outcomes") {
  const std::string text = io::shots_to_jsonl(2, 123, "bell", {0, 5, 15});
  CHECK(text.find("\"seed\":123") != std::string::npos);
  CHECK(text.find("\"stream\":\"bell\"") != std::string::npos);
  CHECK(text.find("\"outcome\":\"II\"") != std::string::npos);
  CHECK(text.find("\"outcome\":\"XX\"") != std::string::npos);  // 5 = digits (1,1)
  CHECK(text.find("\"outcome\":\"ZZ\"") != std::string::npos);
}

TEST_CASE("gate lists serialize with targets") {
  const std::string text =
      io::gates_to_json({{Gate::H, 0}, {Gate::CNOT, 1, 2}, {Gate::S, 1}});
  CHECK(text.find("\"gate\":\"H\"") != std::string::npos);
  CHECK(text.find("\"targets\":[1,2]") != std::string::npos);
}

TEST_SUITE_END();

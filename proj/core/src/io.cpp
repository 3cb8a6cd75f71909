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

#include "paulispec/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "paulispec/version.hpp"

namespace paulispec {
namespace io {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

json row_bits(uint64_t mask, int k) {
  json bits = json::array();
  for (int q = 0; q < k; ++q) bits.push_back((mask >> (k - 1 - q)) & 1 ? 1 : 0);
  return bits;
}

uint64_t bits_row(const json& bits, int k) {
  uint64_t mask = 0;
  for (int q = 0; q < k; ++q)
    if (bits.at(q).get<int>() != 0) mask |= uint64_t{1} << (k - 1 - q);
  return mask;
}

}  // namespace

std::string coeffs_to_jsonl(const PauliMap& coeffs) {
  std::ostringstream out;
  out << json{{"n", coeffs.n}}.dump() << "\n";
  for (const auto& [idx, alpha] : coeffs.entries) {
    json rec{{"pauli", PauliString::from_index(coeffs.n, idx).text()},
             {"re", alpha.real()},
             {"im", alpha.imag()}};
    out << rec.dump() << "\n";
  }
  return out.str();
}

PauliMap coeffs_from_jsonl(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw std::invalid_argument("coeffs_from_jsonl: empty input");
  const json header = json::parse(lines[0]);
  PauliMap map(header.at("n").get<int>());
  for (size_t i = 1; i < lines.size(); ++i) {
    const json rec = json::parse(lines[i]);
    const PauliString p = PauliString::from_text(rec.at("pauli").get<std::string>());
    if (p.n != map.n) throw std::invalid_argument("coeffs_from_jsonl: length mismatch");
    map.set(p.index(), cplx(rec.at("re").get<double>(), rec.at("im").get<double>()));
  }
  return map;
}

void save_coeffs(const std::string& path, const PauliMap& coeffs) {
  write_text_file(path, coeffs_to_jsonl(coeffs));
}

PauliMap load_coeffs(const std::string& path) {
  return coeffs_from_jsonl(read_text_file(path));
}

std::string shots_to_jsonl(int n, uint64_t seed, const std::string& stream,
                           const std::vector<uint64_t>& outcomes) {
  std::ostringstream out;
  out << json{{"n", n}, {"seed", seed}, {"stream", stream}, {"version", kGitDescribe}}
             .dump()
      << "\n";
  for (size_t i = 0; i < outcomes.size(); ++i) {
    out << json{{"shot", i},
                {"outcome", PauliString::from_index(n, outcomes[i]).text()}}
               .dump()
        << "\n";
  }
  return out.str();
}

std::string tableau_to_json(const CliffordTableau& t) {
  json x = json::array(), z = json::array(), phases = json::array();
  for (const auto& row : t.rows) {
    x.push_back(row_bits(row.x, t.k));
    z.push_back(row_bits(row.z, t.k));
    phases.push_back(row.neg ? 1 : 0);
  }
  return json{{"k", t.k}, {"x", x}, {"z", z}, {"phases", phases}}.dump();
}

CliffordTableau tableau_from_json(const std::string& text) {
  const json j = json::parse(text);
  CliffordTableau t;
  t.k = j.at("k").get<int>();
  const auto& x = j.at("x");
  const auto& z = j.at("z");
  const auto& phases = j.at("phases");
  if (x.size() != static_cast<size_t>(2 * t.k))
    throw std::invalid_argument("tableau_from_json: row count mismatch");
  t.rows.resize(2 * t.k);
  for (int r = 0; r < 2 * t.k; ++r) {
    t.rows[r].x = bits_row(x.at(r), t.k);
    t.rows[r].z = bits_row(z.at(r), t.k);
    t.rows[r].neg = phases.at(r).get<int>() != 0;
  }
  return t;
}

std::string snapshots_to_jsonl(int k, uint64_t seed, const std::string& stream,
                               const std::vector<shadows::Snapshot>& snaps) {
  std::ostringstream out;
  out << json{{"k", k}, {"seed", seed}, {"stream", stream}, {"version", kGitDescribe}}
             .dump()
      << "\n";
  for (const auto& s : snaps) {
    out << json{{"tableau", json::parse(tableau_to_json(s.tableau))},
                {"outcome", s.outcome},
                {"stream_index", s.stream_index}}
               .dump()
        << "\n";
  }
  return out.str();
}

std::vector<shadows::Snapshot> snapshots_from_jsonl(const std::string& text,
                                                    int* k_out) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw std::invalid_argument("snapshots_from_jsonl: empty input");
  const json header = json::parse(lines[0]);
  if (k_out) *k_out = header.at("k").get<int>();
  std::vector<shadows::Snapshot> snaps;
  snaps.reserve(lines.size() - 1);
  for (size_t i = 1; i < lines.size(); ++i) {
    const json rec = json::parse(lines[i]);
    shadows::Snapshot s;
    s.tableau = tableau_from_json(rec.at("tableau").dump());
    s.outcome = rec.at("outcome").get<uint64_t>();
    s.stream_index = rec.at("stream_index").get<uint64_t>();
    snaps.push_back(std::move(s));
  }
  return snaps;
}

void save_snapshots(const std::string& path, int k, uint64_t seed,
                    const std::string& stream,
                    const std::vector<shadows::Snapshot>& snaps) {
  write_text_file(path, snapshots_to_jsonl(k, seed, stream, snaps));
}

std::vector<shadows::Snapshot> load_snapshots(const std::string& path, int* k_out) {
  return snapshots_from_jsonl(read_text_file(path), k_out);
}

std::string gates_to_json(const std::vector<GateOp>& gates) {
  json arr = json::array();
  for (const auto& g : gates) {
    json rec{{"gate", gate_name(g.gate)}};
    json targets = json::array();
    targets.push_back(g.a);
    if (g.gate == Gate::CNOT) targets.push_back(g.b);
    rec["targets"] = targets;
    arr.push_back(rec);
  }
  return arr.dump();
}

std::string learn_report_to_json(const learner::LearnReport& rep,
                                 const std::string& run_config_json) {
  json support = json::array();
  for (uint64_t s : rep.support_x)
    support.push_back(PauliString::from_index(rep.alpha_hat.n, s).text());
  json coeffs = json::array();
  for (const auto& [idx, a] : rep.alpha_hat.entries) {
    coeffs.push_back(json{{"pauli", PauliString::from_index(rep.alpha_hat.n, idx).text()},
                          {"re", a.real()},
                          {"im", a.imag()}});
  }
  json out{
      {"version", kGitDescribe},
      {"config", run_config_json.empty() ? json::object() : json::parse(run_config_json)},
      {"support_x", support},
      {"anchor_t", PauliString::from_index(rep.alpha_hat.n, rep.anchor_t).text()},
      {"anchor_mag", rep.anchor_mag},
      {"m1", rep.m1},
      {"m2", rep.m2},
      {"total_queries", rep.total_queries},
      {"theta", rep.theta},
      {"inner_epsilon", rep.inner_epsilon},
      {"truncation_threshold", rep.truncation_threshold},
      {"alpha_hat", coeffs}};
  return out.dump(2);
}

std::string distance_report_to_json(const metrics::DistanceReport& rep,
                                    const std::string& run_config_json) {
  json out{
      {"version", kGitDescribe},
      {"config", run_config_json.empty() ? json::object() : json::parse(run_config_json)},
      {"d_optphase", rep.d_optphase},
      {"phi_star", rep.phi_star},
      {"d_diamond_upper", rep.d_diamond_upper},
      {"d_restricted_mm", rep.d_restricted_mm},
      {"l1p_aligned", rep.l1p_aligned},
      {"l2p_aligned", rep.l2p_aligned}};
  if (rep.d_diamond_exact) out["d_diamond_exact"] = *rep.d_diamond_exact;
  return out.dump(2);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace io
}  // namespace paulispec

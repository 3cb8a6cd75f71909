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
#include "paulispec/learner.hpp"
#include "paulispec/metrics.hpp"
#include "paulispec/pauli.hpp"
#include "paulispec/shadows.hpp"

namespace paulispec {
namespace io {

// Coefficient file: JSON lines, header {"n": <int>} then one record
// {"pauli": "XIZ", "re": <float>, "im": <float>} per entry, ascending index.
std::string coeffs_to_jsonl(const PauliMap& coeffs);
PauliMap coeffs_from_jsonl(const std::string& text);
void save_coeffs(const std::string& path, const PauliMap& coeffs);
PauliMap load_coeffs(const std::string& path);

// Shot log: header {"n","seed","stream"} then {"shot": i, "outcome": "XZ.."}.
std::string shots_to_jsonl(int n, uint64_t seed, const std::string& stream,
                           const std::vector<uint64_t>& outcomes);

// Tableau serialization: row-major bit matrices plus the phase vector.
std::string tableau_to_json(const CliffordTableau& t);
CliffordTableau tableau_from_json(const std::string& text);

// Snapshot archive: header {"k","seed","stream"} then one serialized
// snapshot per line, so estimation can be re-run without re-querying.
std::string snapshots_to_jsonl(int k, uint64_t seed, const std::string& stream,
                               const std::vector<shadows::Snapshot>& snaps);
std::vector<shadows::Snapshot> snapshots_from_jsonl(const std::string& text, int* k_out);
void save_snapshots(const std::string& path, int k, uint64_t seed,
                    const std::string& stream,
                    const std::vector<shadows::Snapshot>& snaps);
std::vector<shadows::Snapshot> load_snapshots(const std::string& path, int* k_out);

std::string gates_to_json(const std::vector<GateOp>& gates);

std::string learn_report_to_json(const learner::LearnReport& rep,
                                 const std::string& run_config_json);
std::string distance_report_to_json(const metrics::DistanceReport& rep,
                                    const std::string& run_config_json);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace io
}  // namespace paulispec

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

#include <functional>
#include <string>
#include <vector>

namespace paulispec {
namespace accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string details;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

// The twelve verification criteria, in order. Thresholds and seeds are fixed
// in code; workers only parallelize independent trials.
std::vector<Criterion> all_criteria(int workers = 0);

// Runs the listed criteria (all when ids is empty), printing one pass/fail
// line each; returns the failures.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, int workers,
                                          bool print);

std::string results_to_json(const std::vector<CriterionResult>& results);
std::string results_to_junit(const std::vector<CriterionResult>& results);

}  // namespace accept
}  // namespace paulispec

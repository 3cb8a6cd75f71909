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

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "paulispec/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  int workers = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      ids.push_back(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
      workers = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance_tests [--only <id>]... [--workers <n>]\n";
      return 1;
    }
  }
  const auto results = paulispec::accept::run_criteria(ids, workers, /*print=*/true);
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  return failures == 0 ? 0 : 1;
}

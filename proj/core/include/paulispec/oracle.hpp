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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paulispec/dense.hpp"
#include "paulispec/rng.hpp"

namespace paulispec {
namespace oracle {

// Exact Bell-measurement distribution |<phi_s|J(u)>|^2 over all 4^n strings,
// computed from the Choi state overlaps. Independent of decompose(), which is
// the other route to the same numbers.
std::vector<double> exact_bell_distribution(const DenseOperator& u);

// Statistical pass thresholds, precomputed from declared parameters, never
// tuned against observed data.
//
// Smallest pass count accepted for `trials` runs of a criterion that succeeds
// with probability >= p: floor(trials p - 3 sqrt(trials p (1-p))).
uint64_t binomial_min_passes(uint64_t trials, double p);
// Chi-square quantile via the Wilson-Hilferty cube approximation.
double chi2_threshold(double dof, double quantile);
// Pearson statistic against the uniform (or given) expectation.
double chi2_statistic(const std::vector<uint64_t>& counts,
                      const std::vector<double>& expected);

struct TrialSummary {
  std::string criterion;
  uint64_t trials = 0;
  uint64_t passes = 0;
  uint64_t min_passes = 0;  // binomial 3-sigma slack policy
  bool pass() const { return passes >= min_passes; }
};

// Runs a seeded closed criterion `trials` times with derived per-trial
// streams; counts passes against the declared success probability.
TrialSummary repeated_trial(const std::string& name,
                            const std::function<bool(RngStream&)>& criterion,
                            uint64_t trials, double success_p, uint64_t seed);

}  // namespace oracle
}  // namespace paulispec

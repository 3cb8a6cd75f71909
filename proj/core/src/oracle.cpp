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

#include "paulispec/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "paulispec/parallel.hpp"
#include "paulispec/sim.hpp"

namespace paulispec {
namespace oracle {

std::vector<double> exact_bell_distribution(const DenseOperator& u) {
  if (u.k > 4) throw std::invalid_argument("exact_bell_distribution: n <= 4 only");
  const DenseState choi = choi_state(u);
  const uint64_t total = uint64_t{1} << (2 * u.k);
  std::vector<double> table(total);
  for (uint64_t s = 0; s < total; ++s)
    table[s] = std::norm(bell_overlap(choi.amps, u.k, s));
  return table;
}

uint64_t binomial_min_passes(uint64_t trials, double p) {
  const double mean = static_cast<double>(trials) * p;
  const double slack = 3.0 * std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
  const double floor_val = std::floor(mean - slack);
  return floor_val <= 0.0 ? 0 : static_cast<uint64_t>(floor_val);
}

double chi2_threshold(double dof, double quantile) {
  if (dof <= 0.0) throw std::invalid_argument("chi2_threshold: dof must be positive");
  // Normal quantile via Acklam's rational approximation (enough precision for
  // committed test thresholds).
  auto norm_quantile = [](double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("bad quantile");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (q < plow) {
      const double u = std::sqrt(-2 * std::log(q));
      x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
          ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1);
    } else if (q <= phigh) {
      const double u = q - 0.5, t = u * u;
      x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
          (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1);
    } else {
      const double u = std::sqrt(-2 * std::log(1 - q));
      x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
          ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1);
    }
    return x;
  };
  const double z = norm_quantile(quantile);
  const double h = 2.0 / (9.0 * dof);
  const double cube = 1.0 - h + z * std::sqrt(h);
  return dof * cube * cube * cube;
}

double chi2_statistic(const std::vector<uint64_t>& counts,
                      const std::vector<double>& expected) {
  if (counts.size() != expected.size())
    throw std::invalid_argument("chi2_statistic: size mismatch");
  double stat = 0.0;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (expected[i] <= 0.0) throw std::invalid_argument("chi2_statistic: bad expectation");
    const double d = static_cast<double>(counts[i]) - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

TrialSummary repeated_trial(const std::string& name,
                            const std::function<bool(RngStream&)>& criterion,
                            uint64_t trials, double success_p, uint64_t seed) {
  TrialSummary summary;
  summary.criterion = name;
  summary.trials = trials;
  summary.min_passes = binomial_min_passes(trials, success_p);
  RngStream root(seed, "repeated-trial/" + name);
  std::vector<uint8_t> outcomes(trials, 0);
  parallel_for(trials, [&](uint64_t t) {
    RngStream sub = root.substream(t);
    outcomes[t] = criterion(sub) ? 1 : 0;
  });
  for (uint8_t o : outcomes) summary.passes += o;
  return summary;
}

}  // namespace oracle
}  // namespace paulispec

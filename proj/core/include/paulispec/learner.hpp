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
#include <optional>
#include <stdexcept>
#include <vector>

#include "paulispec/dense.hpp"
#include "paulispec/pauli.hpp"
#include "paulispec/rng.hpp"
#include "paulispec/sim.hpp"

namespace paulispec {
namespace learner {

// Anchor estimate was indistinguishable from shadow noise; retry with a
// larger budget or a smaller threshold.
class AnchorError : public std::runtime_error {
 public:
  AnchorError(double m_tilde, double epsilon)
      : std::runtime_error("anchor estimate " + std::to_string(m_tilde) +
                           " not above shadow accuracy " + std::to_string(epsilon) +
                           "; theta too large or m2 too small"),
        m_tilde_(m_tilde),
        epsilon_(epsilon) {}
  double m_tilde() const { return m_tilde_; }
  double epsilon() const { return epsilon_; }

 private:
  double m_tilde_;
  double epsilon_;
};

// Desk-scale constants behind the big-O budgets. The m2 constant is the
// shadow-tomography constant; the accuracy-schedule constants are calibrated
// so the end-to-end suites finish in minutes while the probabilistic
// guarantees still hold at the implemented budgets.
struct LearnConstants {
  double c_m1 = 1.0;
  double shadow_c = 34.0;   // c_m2
  double c_acc = 128.0;     // nearly-sparse inner accuracy: c * eps^2 / s^3
  double c_l1_acc = 6.0;    // bounded-l1 inner accuracy: c * eps^4 / L1^2
};

enum class Mode { Theorem, NearlySparse, DominantAnchor, L1Bounded };

struct LearnConfig {
  double theta = 0.1;
  double epsilon = 0.01;   // inner (shadow) accuracy
  double delta = 0.05;
  uint64_t sparsity_s = 0;
  std::optional<double> l1_bound;
  LearnConstants constants;
  Mode mode = Mode::Theorem;

  // Theorem-mode enforces epsilon <= theta^2/16; the derived schedules own
  // their accuracy choice and skip that coupling.
  void validate() const;
  uint64_t m1() const;
  uint64_t m2(uint64_t support_size) const;
};

struct CoefficientEstimate {
  PauliMap alpha_hat;       // all indices of X, before truncation
  uint64_t anchor_t = 0;
  double anchor_mag = 0.0;  // sqrt(max(M_t, 0)) from round 1
  uint64_t m2 = 0;
  // Guarantee-form error radius 3 sqrt(eps)/(anchor - sqrt(eps)); +inf when
  // the anchor is inside the sqrt(eps) noise ball.
  double lemma_eps2 = 0.0;
  // Sharp radius eps (2 + 1/anchor)/anchor from the same proof chain with
  // the exact sqrt-difference bound; used for truncation.
  double sharp_eps2 = 0.0;
};

struct LearnReport {
  std::vector<uint64_t> support_x;  // every distinct Bell outcome, ascending
  PauliMap alpha_hat;               // truncated estimate
  uint64_t anchor_t = 0;
  double anchor_mag = 0.0;
  uint64_t m1 = 0;
  uint64_t m2 = 0;
  uint64_t total_queries = 0;
  double truncation_threshold = 0.0;
  double inner_epsilon = 0.0;
  double theta = 0.0;
};

// Distinct Bell outcomes of m1 Choi copies; contains every |alpha_s| >= theta
// index with probability >= 1 - delta.
std::vector<uint64_t> find_support(const DenseOperator& u, const LearnConfig& cfg,
                                   RngStream& rng, QueryCounter& counter);

// Two shadow rounds of m2 snapshots: magnitudes M_s, anchor selection
// (argmax, ties to the smallest index), then R/I estimates divided by the
// anchor magnitude. Estimates carry a shared global phase.
CoefficientEstimate estimate_coefficients(const DenseOperator& u,
                                          const std::vector<uint64_t>& support,
                                          const LearnConfig& cfg, RngStream& rng,
                                          QueryCounter& counter, int workers = 0);

struct PhaseAlignment {
  double phi = 0.0;      // max_err measured against e^{-i phi} alpha_true
  double max_err = 0.0;
};
// Closed-form least-squares phase phi = arg(sum alpha conj(alpha_hat)).
PhaseAlignment align_phase(const PauliMap& alpha_hat, const PauliMap& alpha_true);

// Algorithm-4 pipeline: theta = eps/sqrt(s), inner accuracy from the
// schedule, support recovery, estimation, truncation at 2*eps2.
LearnReport learn_nearly_sparse(const DenseOperator& u, uint64_t s, double eps,
                                double delta, RngStream& rng,
                                const LearnConstants& constants = {},
                                int workers = 0);

// Corollary preset for a constant-bounded anchor; same pipeline with the
// coarser inner accuracy c_acc (eps/s)^2.
LearnReport learn_dominant_anchor(const DenseOperator& u, uint64_t s, double eps,
                                  double delta, RngStream& rng,
                                  const LearnConstants& constants = {},
                                  int workers = 0);

// Bounded-l1 variant: theta = eps^2/(12 L1), inner accuracy from the
// schedule; output targets ||U - U_hat||_{2,P} <= eps.
LearnReport learn_l1_bounded(const DenseOperator& u, double l1, double eps,
                             double delta, RngStream& rng,
                             const LearnConstants& constants = {},
                             int workers = 0);

}  // namespace learner
}  // namespace paulispec

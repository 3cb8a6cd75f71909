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

#include <optional>

#include "paulispec/dense.hpp"
#include "paulispec/pauli.hpp"
#include "paulispec/rng.hpp"

namespace paulispec {
namespace metrics {

struct DistanceReport {
  double d_optphase = 0.0;
  double phi_star = 0.0;
  std::optional<double> d_diamond_exact;  // unitary pairs only
  double d_diamond_upper = 0.0;
  double d_restricted_mm = 0.0;
  double l1p_aligned = 0.0;
  double l2p_aligned = 0.0;
};

// min over phi of ||u - e^{-i phi} v||_op (largest singular value), found by
// a 512-point grid plus golden-section refinement; phi reported in [0, 2pi).
struct OptPhase {
  double value = 0.0;
  double phi_star = 0.0;
};
OptPhase d_optphase(const Mat& u, const Mat& v);

// min over phi of ||u - e^{-i phi} v||_{1,P} (256-point grid + refinement).
struct AlignedPauliDistance {
  double l1 = 0.0;
  double l2 = 0.0;
  double phi_star = 0.0;
};
AlignedPauliDistance aligned_pauli_distance(const Mat& u, const Mat& v);

// Upper bound on the diamond distance: the smaller of min_phi (2x + x^2)
// with x the phase-aligned Pauli l1 distance, and (||u||+||v||) d_optphase.
double diamond_upper(const Mat& u, const Mat& v);

// Exact diamond distance for a unitary pair: 2 sqrt(1 - r^2) where r is the
// distance from the origin to the convex hull of eig(u^dag v).
double diamond_exact_unitary(const Mat& u, const Mat& v);

// Exact restricted diamond distance at the maximally mixed marginal: trace
// norm of the Choi-state difference, via dense eigendecomposition of the
// 2^{2n}-dimensional Hermitian difference (v need not be unitary).
double restricted_diamond_mm(const Mat& u, const Mat& v);

struct L2BoundCheck {
  double nu = 0.0;
  double bound = 0.0;
  double actual = 0.0;
};
// nu = ||u-v||_{2,P}, bound = 2nu + nu^2, actual = restricted_diamond_mm;
// throws if the bound is violated beyond 1e-9.
L2BoundCheck l2_bound_check(const Mat& u, const Mat& v);

// Max TV distance of outcome distributions over random two-outcome projective
// measurements on the Choi pair; always <= restricted_diamond_mm / 2.
double tv_contractivity_check(const Mat& u, const Mat& v, int povm_samples,
                              RngStream& rng);

DistanceReport distance_report(const Mat& u, const Mat& v);

}  // namespace metrics
}  // namespace paulispec

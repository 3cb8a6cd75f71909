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

#include "paulispec/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "paulispec/sim.hpp"

namespace paulispec {
namespace metrics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double op_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

// Grid scan plus golden-section refinement of a smooth periodic function.
template <typename F>
std::pair<double, double> minimize_phase(F f, int grid_points, double tol) {
  double best_phi = 0.0;
  double best = f(0.0);
  const double step = kTwoPi / grid_points;
  for (int i = 1; i < grid_points; ++i) {
    const double phi = i * step;
    const double v = f(phi);
    if (v < best) { best = v; best_phi = phi; }
  }
  double lo = best_phi - step;
  double hi = best_phi + step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - gr * (hi - lo);
  double b = lo + gr * (hi - lo);
  double fa = f(a), fb = f(b);
  while (hi - lo > tol) {
    if (fa < fb) {
      hi = b; b = a; fb = fa;
      a = hi - gr * (hi - lo);
      fa = f(a);
    } else {
      lo = a; a = b; fa = fb;
      b = lo + gr * (hi - lo);
      fb = f(b);
    }
  }
  const double phi = 0.5 * (lo + hi);
  double val = f(phi);
  if (fa < val) val = fa;
  if (fb < val) val = fb;
  return {val, std::fmod(phi + kTwoPi, kTwoPi)};
}

void require_same_dims(const Mat& u, const Mat& v, const char* where) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

void require_unitary(const Mat& m, const char* where) {
  const Mat defect = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
  if (defect.cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument(std::string(where) + ": operator is not unitary");
}

int log2_dim(int64_t dim) {
  int n = 0;
  while ((int64_t{1} << n) < dim) ++n;
  return n;
}

// Distance from the origin to the convex hull of a 2D point set, exact.
double hull_distance(const std::vector<std::pair<double, double>>& pts) {
  // Monotone chain hull.
  std::vector<std::pair<double, double>> p = pts;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const size_t m = p.size();
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull;
  if (m <= 2) {
    hull = p;
  } else {
    hull.resize(2 * m);
    size_t h = 0;
    for (size_t i = 0; i < m; ++i) {
      while (h >= 2 && cross(hull[h - 2], hull[h - 1], p[i]) <= 0) --h;
      hull[h++] = p[i];
    }
    const size_t lower = h + 1;
    for (size_t i = m - 1; i-- > 0;) {
      while (h >= lower && cross(hull[h - 2], hull[h - 1], p[i]) <= 0) --h;
      hull[h++] = p[i];
    }
    hull.resize(h - 1);
  }

  auto seg_dist = [](const auto& a, const auto& b) {
    const double dx = b.first - a.first, dy = b.second - a.second;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0) t = std::clamp(-(a.first * dx + a.second * dy) / len2, 0.0, 1.0);
    const double px = a.first + t * dx, py = a.second + t * dy;
    return std::hypot(px, py);
  };
  if (hull.size() == 1) return std::hypot(hull[0].first, hull[0].second);
  if (hull.size() == 2) return seg_dist(hull[0], hull[1]);

  // Inside test (hull is counter-clockwise).
  const std::pair<double, double> origin{0.0, 0.0};
  bool inside = true;
  for (size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, origin) < 0) { inside = false; break; }
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < hull.size(); ++i)
    best = std::min(best, seg_dist(hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

}  // namespace

OptPhase d_optphase(const Mat& u, const Mat& v) {
  require_same_dims(u, v, "d_optphase");
  auto f = [&](double phi) {
    return op_norm(u - std::exp(cplx(0, -phi)) * v);
  };
  auto [val, phi] = minimize_phase(f, 512, 1e-8);
  return OptPhase{val, phi};
}

AlignedPauliDistance aligned_pauli_distance(const Mat& u, const Mat& v) {
  require_same_dims(u, v, "aligned_pauli_distance");
  const PauliMap pu = decompose(u);
  const PauliMap pv = decompose(v);
  auto diff_norms = [&](double phi) {
    const cplx w = std::exp(cplx(0, -phi));
    double l1 = 0.0, l2sq = 0.0;
    auto iu = pu.entries.begin();
    auto iv = pv.entries.begin();
    while (iu != pu.entries.end() || iv != pv.entries.end()) {
      cplx d;
      if (iv == pv.entries.end() || (iu != pu.entries.end() && iu->first < iv->first)) {
        d = iu->second; ++iu;
      } else if (iu == pu.entries.end() || iv->first < iu->first) {
        d = -w * iv->second; ++iv;
      } else {
        d = iu->second - w * iv->second; ++iu; ++iv;
      }
      const double m = std::abs(d);
      l1 += m;
      l2sq += m * m;
    }
    return std::pair<double, double>{l1, l2sq};
  };
  auto f = [&](double phi) { return diff_norms(phi).first; };
  auto [l1, phi] = minimize_phase(f, 256, 1e-8);
  auto [l1b, l2sq] = diff_norms(phi);
  return AlignedPauliDistance{std::min(l1, l1b), std::sqrt(l2sq), phi};
}

double diamond_upper(const Mat& u, const Mat& v) {
  require_same_dims(u, v, "diamond_upper");
  require_unitary(u, "diamond_upper");
  const double x = aligned_pauli_distance(u, v).l1;
  const double via_l1 = 2.0 * x + x * x;
  const double via_op = (op_norm(u) + op_norm(v)) * d_optphase(u, v).value;
  return std::min(via_l1, via_op);
}

double diamond_exact_unitary(const Mat& u, const Mat& v) {
  require_same_dims(u, v, "diamond_exact_unitary");
  require_unitary(u, "diamond_exact_unitary");
  require_unitary(v, "diamond_exact_unitary");
  Eigen::ComplexEigenSolver<Mat> es(u.adjoint() * v, false);
  std::vector<std::pair<double, double>> pts;
  for (int64_t i = 0; i < es.eigenvalues().size(); ++i)
    pts.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
  const double r = std::min(1.0, hull_distance(pts));
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - r * r));
}

double restricted_diamond_mm(const Mat& u, const Mat& v) {
  require_same_dims(u, v, "restricted_diamond_mm");
  require_unitary(u, "restricted_diamond_mm");
  const int n = log2_dim(u.rows());
  if (2 * n > dense_cap())
    throw std::invalid_argument("restricted_diamond_mm: dims over dense cap");
  const int64_t dim = u.rows();
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Vec psi_u(dim * dim), psi_v(dim * dim);
  for (int64_t a = 0; a < dim; ++a)
    for (int64_t r = 0; r < dim; ++r) {
      psi_u(a * dim + r) = u(a, r) * scale;
      psi_v(a * dim + r) = v(a, r) * scale;
    }
  const Mat delta = psi_u * psi_u.adjoint() - psi_v * psi_v.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> es(delta, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

L2BoundCheck l2_bound_check(const Mat& u, const Mat& v) {
  require_same_dims(u, v, "l2_bound_check");
  const int64_t dim = u.rows();
  const double nu = (u - v).norm() / std::sqrt(static_cast<double>(dim));
  L2BoundCheck out;
  out.nu = nu;
  out.bound = 2.0 * nu + nu * nu;
  out.actual = restricted_diamond_mm(u, v);
  if (out.actual > out.bound + 1e-9)
    throw std::logic_error("l2_bound_check: restricted diamond exceeds 2nu+nu^2");
  return out;
}

double tv_contractivity_check(const Mat& u, const Mat& v, int povm_samples,
                              RngStream& rng) {
  require_same_dims(u, v, "tv_contractivity_check");
  require_unitary(u, "tv_contractivity_check");
  const int64_t dim = u.rows();
  const int64_t dim2 = dim * dim;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Vec psi_u(dim2), psi_v(dim2);
  for (int64_t a = 0; a < dim; ++a)
    for (int64_t r = 0; r < dim; ++r) {
      psi_u(a * dim + r) = u(a, r) * scale;
      psi_v(a * dim + r) = v(a, r) * scale;
    }
  const Mat delta = psi_u * psi_u.adjoint() - psi_v * psi_v.adjoint();
  const int n2 = log2_dim(dim2);

  double max_tv = 0.0;
  for (int sample = 0; sample < povm_samples; ++sample) {
    RngStream sub = rng.substream(sample);
    const Mat q = random_unitary(n2, sub);
    const int64_t rank = 1 + static_cast<int64_t>(sub.next_below(dim2 - 1));
    const Mat p = q.leftCols(rank) * q.leftCols(rank).adjoint();
    const double d0 = (p * delta).trace().real();
    const double d1 = delta.trace().real() - d0;
    max_tv = std::max(max_tv, 0.5 * (std::abs(d0) + std::abs(d1)));
  }
  return max_tv;
}

DistanceReport distance_report(const Mat& u, const Mat& v) {
  DistanceReport rep;
  const OptPhase op = d_optphase(u, v);
  rep.d_optphase = op.value;
  rep.phi_star = op.phi_star;
  const AlignedPauliDistance al = aligned_pauli_distance(u, v);
  rep.l1p_aligned = al.l1;
  rep.l2p_aligned = al.l2;
  rep.d_diamond_upper = diamond_upper(u, v);
  rep.d_restricted_mm = restricted_diamond_mm(u, v);
  const Mat defect = v.adjoint() * v - Mat::Identity(v.rows(), v.cols());
  if (defect.cwiseAbs().maxCoeff() <= 1e-10)
    rep.d_diamond_exact = diamond_exact_unitary(u, v);
  return rep;
}

}  // namespace metrics
}  // namespace paulispec

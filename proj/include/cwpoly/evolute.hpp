#pragma once

// Evolutes and involutes of fronts. The evolute comes with its curvature
// radii; the involute with its signed-area gap and a sampled check that it
// stays inside the region bounded by its evolute.

#include <algorithm>
#include <vector>

#include "cwpoly/cw.hpp"

namespace cwpoly {

template <Scalar T>
struct Evolute {
  EdgeIndexed<Vec2<T>> e;  // E_i: centre of the U-copy touching edge i
  EdgeIndexed<T> mus;      // curvature radius of edge i
};

/// mu_i = lambda_i / [U_i, U_{i+1}], checked against P_{i+1} - P_i =
/// mu_i (U_{i+1} - U_i). Both expressions for E_i are checked too.
template <Scalar T>
Evolute<T> evolute(const PairedPolygon<T>& p, const CenteredBall<T>& u, const CenteredBall<T>& v) {
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  EdgeIndexed<T> lambdas = v_lengths(p.vertices, v);
  EdgeIndexed<T> direct = edge_coefficients(p.vertices, u.vertices);
  std::vector<T> mus;
  std::vector<Vec2<T>> centres;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    T mu = lambdas[i] / det(u[i], u[i + 1]);
    if (!same(mu, direct[i])) {
      throw GeometryError(ErrorKind::identity_failure, "curvature radius forms disagree at " + std::to_string(i));
    }
    Vec2<T> from_start = p[i] - mu * u[i];
    Vec2<T> from_end = p[i + 1] - mu * u[i + 1];
    if (!same_point(from_start, from_end)) {
      throw GeometryError(ErrorKind::identity_failure, "evolute forms disagree at " + std::to_string(i));
    }
    mus.push_back(mu);
    centres.push_back(from_start);
  }
  return Evolute<T>{EdgeIndexed<Vec2<T>>(std::move(centres)), EdgeIndexed<T>(std::move(mus))};
}

/// Edge i of E runs from E_i to E_{i+1} = E_i + (mu_i - mu_{i+1}) U_{i+1};
/// a cusp sits where that coefficient changes sign.
template <Scalar T>
CuspReport evolute_cusps(const Evolute<T>& ev) {
  const auto m = static_cast<std::ptrdiff_t>(ev.mus.size());
  std::vector<T> g;
  for (std::ptrdiff_t i = 0; i < m; ++i) g.push_back(ev.mus[i + 1] - ev.mus[i]);
  return sign_change_vertices(EdgeIndexed<T>(std::move(g)));
}

/// One involute step in a plane with ball B and dual W: edge coefficients of
/// X against B give the beta ladder, then Y_i = X_i + beta_i W_i must equal
/// X_{i+1} + beta_{i+1} W_i.
template <Scalar T>
struct InvoluteStep {
  Cyclic<Vec2<T>> y;
  EdgeIndexed<T> alphas;
  Cyclic<T> betas;
};

template <Scalar T>
InvoluteStep<T> involute_step(const Cyclic<Vec2<T>>& x, const Cyclic<Vec2<T>>& b, const Cyclic<Vec2<T>>& w) {
  const auto m = static_cast<std::ptrdiff_t>(x.size());
  InvoluteStep<T> out;
  out.alphas = edge_coefficients(x, b);
  out.betas = beta_ladder(out.alphas, b);
  std::vector<Vec2<T>> y;
  y.reserve(x.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    Vec2<T> first = x[i] + out.betas[i] * w[i];
    Vec2<T> second = x[i + 1] + out.betas[i + 1] * w[i];
    if (!same_point(first, second)) {
      throw GeometryError(ErrorKind::identity_failure, "involute forms disagree at " + std::to_string(i));
    }
    y.push_back(first);
  }
  out.y = Cyclic<Vec2<T>>(std::move(y));
  return out;
}

template <Scalar T>
struct Involute {
  EdgeIndexed<Vec2<T>> n;  // n[i + n] == n[i]
  Cyclic<T> betas;
};

template <Scalar T>
Involute<T> involute(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, const CenteredBall<T>& v) {
  InvoluteStep<T> step = involute_step(cm.m, u.vertices, v.vertices);
  return Involute<T>{std::move(step.y), std::move(step.betas)};
}

/// SA(X) = -A(X, X). Non-negative for central equidistants and involutes.
template <Scalar T>
T signed_area(const Cyclic<Vec2<T>>& x) {
  return -mixed_area(x, x);
}

/// sum_{i<n} beta_i^2 [W_{i-1}, W_i]: the drop SA(X) - SA(Y) across one
/// involute step with dual ball W.
template <Scalar T>
T signed_area_gap(const Cyclic<T>& betas, const Cyclic<Vec2<T>>& w) {
  const auto n = static_cast<std::ptrdiff_t>(betas.size() / 2);
  T total(0);
  for (std::ptrdiff_t i = 0; i < n; ++i) total += betas[i] * betas[i] * det(w[i - 1], w[i]);
  return total;
}

template <Scalar T>
struct ContainmentResult {
  bool contained = true;
  std::vector<Vec2<T>> witnesses;  // sampled points found in the exterior
  std::size_t samples = 0;
};

/// A convex polygon whose chord midpoints classify the region bounded by the
/// front X with ball B: X + cB for any c beyond the convexity threshold.
template <Scalar T>
Points<T> chord_source(const Cyclic<Vec2<T>>& x, const Cyclic<Vec2<T>>& b) {
  T c = convexity_threshold(edge_coefficients(x, b)) + T(1);
  Points<T> out;
  const auto m = static_cast<std::ptrdiff_t>(x.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) out.push_back(x[i] + c * b[i]);
  return drop_collinear(drop_repeats<T>(out));
}

/// Samples every segment of `curve` at `samples` + 1 evenly spaced points and
/// checks none lies in the exterior of the front X (chord count 1).
template <Scalar T>
ContainmentResult<T> containment_check(const Cyclic<Vec2<T>>& curve, const Cyclic<Vec2<T>>& x,
                                       const Cyclic<Vec2<T>>& b, std::size_t samples = 16) {
  ContainmentResult<T> r;
  if (samples == 0) samples = 1;
  Points<T> source = chord_source(x, b);
  const auto m = static_cast<std::ptrdiff_t>(curve.size());
  // The curve repeats with period n, so half the segments suffice.
  const auto half = m / 2;
  for (std::ptrdiff_t i = 0; i < half; ++i) {
    const Vec2<T>& a = curve[i - 1];
    const Vec2<T>& bnd = curve[i];
    for (std::size_t j = 0; j <= samples; ++j) {
      if (j > 0 && same_point(a, bnd)) break;
      T t = T(static_cast<long>(j)) / T(static_cast<long>(samples));
      Vec2<T> q = a + t * Vec2<T>(bnd - a);
      ++r.samples;
      RegionResult region = point_region_test<T>(q, source);
      if (region.status == RegionStatus::exterior_of_m) {
        r.contained = false;
        r.witnesses.push_back(q);
      }
    }
  }
  return r;
}

}  // namespace cwpoly

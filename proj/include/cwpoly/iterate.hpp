#pragma once

// Iterated involutes. M(k) has constant U-width, N(k+1) = Inv(M(k)) has
// constant V-width, M(k+1) = Inv(N(k+1)) is back in the U-world. The fronts
// shrink to a single point O.

#include <cmath>
#include <optional>
#include <vector>

#include "cwpoly/evolute.hpp"

namespace cwpoly {

template <Scalar T>
struct IterationStep {
  std::size_t k = 0;
  Cyclic<Vec2<T>> m;             // M(k)
  std::optional<Cyclic<Vec2<T>>> n;  // N(k), absent for k = 0
  EdgeIndexed<T> alphas;         // M(k) against U; empty on the last step
  Cyclic<T> betas;
  T sa_m{};
  std::optional<T> sa_n;
  /// Predicted SA(N(k)) - SA(M(k)) from the step that produced M(k).
  std::optional<T> gap_from_n;
  /// Predicted SA(M(k)) - SA(N(k+1)), i.e. sum beta(k)^2 [V, V]. Absent on
  /// the last step, which is never carried forward.
  std::optional<T> gap_to_next_n;
  T diameter_sq{};
  double diameter = 0.0;
};

template <Scalar T>
struct IterationTrace {
  std::vector<IterationStep<T>> steps;
  Vec2<T> o;                 // vertex centroid of the last front
  double error_radius = 0.0;  // diameter of the last front
  bool converged = false;
};

/// Largest squared Euclidean distance between two vertices of a front that
/// repeats with period n; one period is enough.
template <Scalar T>
T diameter_squared(const Cyclic<Vec2<T>>& x) {
  T best(0);
  const std::size_t half = x.size() / 2 > 0 ? x.size() / 2 : x.size();
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = i + 1; j < half; ++j) {
      T d = squared_distance(x.items()[i], x.items()[j]);
      if (d > best) best = d;
    }
  }
  return best;
}

template <Scalar T>
Vec2<T> vertex_centroid(const Cyclic<Vec2<T>>& x) {
  Vec2<T> sum{T(0), T(0)};
  for (const auto& p : x) sum = sum + p;
  return sum / T(static_cast<long>(x.size()));
}

/// Runs the involute iteration from the central equidistant of P. Stops once
/// the diameter of M(k) is below `tol` or after `max_steps` involute pairs.
template <Scalar T>
IterationTrace<T> iterate_involutes(const PairedPolygon<T>& p, const MinkowskiPlane<T>& plane,
                                    std::size_t max_steps, const T& tol) {
  if (max_steps < 1) throw GeometryError(ErrorKind::invalid_input, "iterate: max_steps must be at least 1");
  // A plain comparison: in floating point sign() would treat a tiny tol as 0.
  if (!(tol > T(0))) throw GeometryError(ErrorKind::invalid_input, "iterate: tol must be positive");
  const Cyclic<Vec2<T>>& u = plane.u.vertices;
  const Cyclic<Vec2<T>>& v = plane.v.vertices;
  // Dual of V is U shifted: W_i = -U_{i+1}.
  const Cyclic<Vec2<T>> w = dual_ball(plane.v).vertices;
  const T tol_sq = tol * tol;

  IterationTrace<T> trace;
  Cyclic<Vec2<T>> m = central_equidistant(p, plane.u).m;
  std::optional<Cyclic<Vec2<T>>> n_prev;
  std::optional<T> gap_prev;
  for (std::size_t k = 0;; ++k) {
    IterationStep<T> step;
    step.k = k;
    step.m = m;
    step.n = n_prev;
    step.sa_m = signed_area(m);
    if (n_prev) step.sa_n = signed_area(*n_prev);
    step.gap_from_n = gap_prev;
    step.diameter_sq = diameter_squared(m);
    step.diameter = std::sqrt(to_double(step.diameter_sq));

    // A front below tolerance is not stepped again: in floating point its
    // edges are at the noise floor and the identity checks lose meaning.
    if (step.diameter_sq < tol_sq) {
      trace.converged = true;
      trace.steps.push_back(std::move(step));
      break;
    }
    if (k >= max_steps) {
      trace.steps.push_back(std::move(step));
      break;
    }

    InvoluteStep<T> to_n = involute_step(m, u, v);
    step.alphas = to_n.alphas;
    step.betas = to_n.betas;
    step.gap_to_next_n = signed_area_gap(to_n.betas, v);
    trace.steps.push_back(std::move(step));

    InvoluteStep<T> to_m = involute_step(to_n.y, v, w);
    // Slot i of the raw result sits at vertex i + 1 of the U-indexed front.
    m = to_m.y.rotated(-1);
    gap_prev = signed_area_gap(to_m.betas, w);
    n_prev = std::move(to_n.y);
  }
  const auto& last = trace.steps.back();
  trace.o = vertex_centroid(last.m);
  trace.error_radius = last.diameter;
  return trace;
}

template <Scalar T>
struct WidthFamily {
  PairedPolygon<T> p;                // M(k) + cU
  std::optional<PairedPolygon<T>> q;  // N(k) + dV, absent for k = 0
};

template <Scalar T>
WidthFamily<T> width_family(const IterationTrace<T>& trace, const MinkowskiPlane<T>& plane, std::size_t k,
                            const T& c, const T& d) {
  if (k >= trace.steps.size()) throw GeometryError(ErrorKind::invalid_input, "width_family: k out of range");
  const auto& step = trace.steps[k];
  const auto m = static_cast<std::ptrdiff_t>(step.m.size());
  auto shift = [&](const Cyclic<Vec2<T>>& x, const CenteredBall<T>& ball, const T& s) {
    std::vector<Vec2<T>> out;
    for (std::ptrdiff_t i = 0; i < m; ++i) out.push_back(x[i] + s * ball[i]);
    return PairedPolygon<T>{Cyclic<Vec2<T>>(std::move(out)), plane.n};
  };
  WidthFamily<T> out{shift(step.m, plane.u, c), std::nullopt};
  if (step.n) out.q = shift(*step.n, plane.v, d);
  return out;
}

/// Largest Euclidean vertex distance between X and O + sB.
template <Scalar T>
double distance_to_ball(const PairedPolygon<T>& x, const Vec2<T>& o, const CenteredBall<T>& ball, const T& s) {
  double best = 0.0;
  const auto m = static_cast<std::ptrdiff_t>(x.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    Vec2<double> d = to_double(Vec2<T>(x[i] - (o + s * ball[i])));
    best = std::max(best, std::hypot(d.x, d.y));
  }
  return best;
}

}  // namespace cwpoly

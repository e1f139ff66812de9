#pragma once

// The polygonal Minkowski plane of a convex polygon. After pairing opposite
// sides we get the unit ball U in which the polygon has constant width and
// its dual ball V. Support and width use the pairing f(.) = [., v].

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cwpoly/geom_core.hpp"

namespace cwpoly {

/// Number of pairs of parallel sides of a convex polygon.
template <Scalar T>
std::size_t count_parallel_pairs(const ConvexPolygon<T>& p) {
  const std::size_t k = p.size();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Vec2<T> ei = p[i + 1] - p[i];
      Vec2<T> ej = p[j + 1] - p[j];
      if (is_zero(det(ei, ej))) ++pairs;
    }
  }
  return pairs;
}

namespace detail {

template <Scalar T>
Vec2<T> upper_direction(const Vec2<T>& v) {
  return half_turn(v) == 0 ? v : Vec2<T>(-v);
}

}  // namespace detail

/// Rewrites the vertex list of a k-gon with j parallel side pairs as 2n
/// vertices, n = k - j, with side i parallel to side i + n. A direction with
/// no partner gets a repeated vertex (a degenerate side) on the opposite
/// side. The list starts at the side of smallest angle in [0, pi).
template <Scalar T>
PairedPolygon<T> reorder_parallel(const ConvexPolygon<T>& poly) {
  const std::size_t k = poly.size();
  std::vector<Vec2<T>> edges;
  for (std::size_t i = 0; i < k; ++i) edges.push_back(poly[i + 1] - poly[i]);

  std::vector<Vec2<T>> dirs;
  for (const auto& e : edges) {
    Vec2<T> u = detail::upper_direction(e);
    bool seen = std::any_of(dirs.begin(), dirs.end(), [&](const Vec2<T>& d) { return is_zero(det(u, d)); });
    if (!seen) dirs.push_back(u);
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const Vec2<T>& a, const Vec2<T>& b) { return sign(det(a, b)) > 0; });
  const std::size_t n = dirs.size();

  // Starting side: realizes the smallest direction, preferring the copy
  // that points into [0, pi) when both sides of the pair exist.
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_zero(det(edges[i], dirs[0]))) continue;
    if (!start || half_turn(edges[i]) == 0) start = i;
  }
  const T orient = half_turn(edges[*start]) == 0 ? T(1) : T(-1);

  std::vector<Vec2<T>> sweep;
  for (const auto& d : dirs) sweep.push_back(orient * d);
  for (const auto& d : dirs) sweep.push_back(T(-orient) * d);

  std::vector<Vec2<T>> out;
  out.reserve(2 * n);
  std::size_t at = *start;
  std::size_t used = 0;
  out.push_back(poly[at]);
  for (std::size_t j = 0; j + 1 < 2 * n; ++j) {
    if (same_direction(edges[at % k], sweep[j])) {
      ++at;
      ++used;
    }
    out.push_back(poly[at]);
  }
  if (same_direction(edges[at % k], sweep[2 * n - 1])) ++used;
  if (used != k) {
    throw GeometryError(ErrorKind::identity_failure, "reorder_parallel: sides not consumed in angular order");
  }
  return PairedPolygon<T>{Cyclic<Vec2<T>>(std::move(out)), n};
}

/// Checks the paired-polygon invariants; throws on violation.
template <Scalar T>
void validate_paired(const PairedPolygon<T>& p) {
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  const auto n = static_cast<std::ptrdiff_t>(p.n);
  if (p.n < 2 || m != 2 * n) {
    throw GeometryError(ErrorKind::invalid_input, "paired polygon needs 2n vertices with n >= 2");
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (same_point(p[i], p[i + n])) {
      throw GeometryError(ErrorKind::degenerate_diagonal,
                          "diagonal " + std::to_string(i) + " has zero length");
    }
    Vec2<T> e = p[i + 1] - p[i];
    Vec2<T> f = p[i + n + 1] - p[i + n];
    bool e_zero = is_zero(e);
    bool f_zero = is_zero(f);
    if (e_zero && f_zero) {
      throw GeometryError(ErrorKind::invalid_input, "both sides of pair " + std::to_string(i) + " degenerate");
    }
    if (!e_zero && !f_zero && !(is_zero(det(e, f)) && sign(dot(e, f)) < 0)) {
      throw GeometryError(ErrorKind::not_parallel, "sides " + std::to_string(i) + " and " +
                                                       std::to_string(i + n) + " are not opposite-parallel");
    }
  }
  Points<T> distinct = drop_repeats(as_span(p.vertices));
  distinct = drop_collinear(std::move(distinct));
  if (!is_strictly_convex_ccw<T>(distinct)) {
    throw GeometryError(ErrorKind::non_convex, "paired polygon is not convex");
  }
}

/// U_i = (P_i - P_{i+n}) / (2a), centred at the origin.
template <Scalar T>
CenteredBall<T> unit_ball(const PairedPolygon<T>& p, const T& a) {
  if (sign(a) <= 0) throw GeometryError(ErrorKind::invalid_input, "unit_ball: a must be positive");
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  const auto n = static_cast<std::ptrdiff_t>(p.n);
  std::vector<Vec2<T>> u;
  u.reserve(p.size());
  T scale = T(1) / (T(2) * a);
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    Vec2<T> diag = p[i] - p[i + n];
    if (is_zero(diag)) {
      throw GeometryError(ErrorKind::degenerate_diagonal, "diagonal " + std::to_string(i) + " has zero length");
    }
    u.push_back(scale * diag);
  }
  return CenteredBall<T>{Cyclic<Vec2<T>>(std::move(u))};
}

/// Throws unless the ball is centrally symmetric with positive consecutive
/// determinants and a single turn.
template <Scalar T>
void validate_centered_ball(const CenteredBall<T>& b) {
  const auto m = static_cast<std::ptrdiff_t>(b.size());
  if (m < 4 || m % 2 != 0) throw GeometryError(ErrorKind::invalid_input, "ball needs 2n >= 4 vertices");
  const auto n = m / 2;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    if (!same_point(b[i + n], Vec2<T>(-b[i]))) {
      throw GeometryError(ErrorKind::invalid_input, "ball is not symmetric about the origin");
    }
    if (sign(det(b[i], b[i + 1])) <= 0) {
      throw GeometryError(ErrorKind::non_convex, "ball determinant [W_i, W_{i+1}] not positive");
    }
  }
  if (!is_strictly_convex_ccw<T>(as_span(b.vertices))) {
    throw GeometryError(ErrorKind::non_convex, "ball is not strictly convex");
  }
}

/// V_{i+1/2} = (U_{i+1} - U_i) / [U_i, U_{i+1}], stored in slot i.
template <Scalar T>
CenteredBall<T> dual_ball(const CenteredBall<T>& u) {
  const auto m = static_cast<std::ptrdiff_t>(u.size());
  std::vector<Vec2<T>> v;
  v.reserve(u.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    T d = det(u[i], u[i + 1]);
    if (is_zero(d)) throw GeometryError(ErrorKind::invalid_input, "dual_ball: zero determinant");
    v.push_back(Vec2<T>(u[i + 1] - u[i]) / d);
  }
  return CenteredBall<T>{Cyclic<Vec2<T>>(std::move(v))};
}

/// Inverse of dual_ball with the original indexing:
/// U_i = -(V_{i+1/2} - V_{i-1/2}) / [V_{i-1/2}, V_{i+1/2}].
template <Scalar T>
CenteredBall<T> primal_from_dual(const CenteredBall<T>& v) {
  const auto m = static_cast<std::ptrdiff_t>(v.size());
  std::vector<Vec2<T>> u;
  u.reserve(v.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    T d = det(v[i - 1], v[i]);
    if (is_zero(d)) throw GeometryError(ErrorKind::invalid_input, "primal_from_dual: zero determinant");
    u.push_back(Vec2<T>(v[i - 1] - v[i]) / d);
  }
  return CenteredBall<T>{Cyclic<Vec2<T>>(std::move(u))};
}

/// h(P)(f) = max over vertices of [p, f].
template <Scalar T>
T support(std::span<const Vec2<T>> p, const Vec2<T>& f) {
  if (p.empty()) throw GeometryError(ErrorKind::invalid_input, "support of an empty set");
  T best = det(p[0], f);
  for (std::size_t i = 1; i < p.size(); ++i) {
    T value = det(p[i], f);
    if (value > best) best = value;
  }
  return best;
}

template <Scalar T>
T width(std::span<const Vec2<T>> p, const Vec2<T>& f) {
  return support(p, f) + support(p, Vec2<T>(-f));
}

/// Dual norm of v for the ball U: sup over u in U of [u, v].
template <Scalar T>
T dual_norm(const CenteredBall<T>& u, const Vec2<T>& v) {
  return support(as_span(u.vertices), v);
}

/// Norm of x induced by U, computed from the dual ball V as max_j [x, V_j].
template <Scalar T>
T ball_norm(const CenteredBall<T>& v, const Vec2<T>& x) {
  return support(as_span(v.vertices), Vec2<T>(-x));
}

/// The four equivalent constant-width statements, evaluated independently.
template <Scalar T>
struct ConstantWidthResult {
  bool constant = false;
  T a{};                                   // half-width, meaningful when constant
  std::optional<std::size_t> witness;      // first index where the diagonal test fails
  bool edges_parallel = false;             // precondition: sides follow U's sides
  bool width_constant = false;             // item 1: w(P)(V_{i+1/2}) independent of i
  bool sum_homothetic = false;             // item 2: P + (-P) == 2a U
  bool diagonals_parallel = false;         // item 3
  bool diagonals_proportional = false;     // item 4: P_i - P_{i+n} == 2a U_i
};

template <Scalar T>
ConstantWidthResult<T> is_constant_width(const PairedPolygon<T>& p, const CenteredBall<T>& u) {
  ConstantWidthResult<T> r;
  if (p.size() != u.size()) {
    throw GeometryError(ErrorKind::length_mismatch, "is_constant_width: P and U differ in length");
  }
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  const auto n = m / 2;

  r.edges_parallel = true;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    Vec2<T> e = p[i + 1] - p[i];
    if (!is_zero(e) && !same_direction(e, Vec2<T>(u[i + 1] - u[i]))) {
      r.edges_parallel = false;
      if (!r.witness) r.witness = static_cast<std::size_t>(i);
    }
  }

  r.diagonals_parallel = true;
  r.diagonals_proportional = true;
  std::optional<T> ratio;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    Vec2<T> diag = p[i] - p[i + n];
    if (!is_zero(det(diag, u[i]))) r.diagonals_parallel = false;
    T t;
    bool ok = solve_multiple(diag, u[i], t);
    if (ok && !ratio) ratio = t;
    if (!ok || !same(t, *ratio)) {
      r.diagonals_proportional = false;
      if (!r.witness) r.witness = static_cast<std::size_t>(i);
    }
  }

  CenteredBall<T> v = dual_ball(u);
  T w0 = width(as_span(p.vertices), v[0]);
  r.width_constant = true;
  for (std::ptrdiff_t i = 1; i < m; ++i) {
    if (!same(width(as_span(p.vertices), v[i]), w0)) r.width_constant = false;
  }

  T a = r.diagonals_proportional ? T(*ratio / T(2)) : T(w0 / T(2));
  Points<T> pts = drop_repeats(as_span(p.vertices));
  Points<T> neg;
  for (const auto& q : pts) neg.push_back(-q);
  Points<T> sum = minkowski_sum<T>(pts, neg);
  Points<T> scaled;
  for (const auto& q : u.vertices) scaled.push_back(T(2) * a * q);
  r.sum_homothetic = sign(a) > 0 && same_cyclic<T>(sum, scaled);

  r.constant = r.edges_parallel && r.width_constant && r.sum_homothetic && r.diagonals_parallel &&
               r.diagonals_proportional && sign(a) > 0;
  r.a = a;
  if (r.constant) r.witness.reset();
  return r;
}

/// The two balls of one polygon together with its half-width.
template <Scalar T>
struct MinkowskiPlane {
  CenteredBall<T> u;
  CenteredBall<T> v;
  std::size_t n = 0;
  T a{};
};

template <Scalar T>
MinkowskiPlane<T> make_plane(const PairedPolygon<T>& p, const T& a) {
  MinkowskiPlane<T> plane;
  plane.u = unit_ball(p, a);
  plane.v = dual_ball(plane.u);
  plane.n = p.n;
  plane.a = a;
  return plane;
}

}  // namespace cwpoly

#pragma once

// Polygon substrate. Areas and mixed areas, convex Minkowski sums and input
// cleanup live here, next to the chord-midpoint region test.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cwpoly/cyclic.hpp"
#include "cwpoly/error.hpp"
#include "cwpoly/scalar.hpp"
#include "cwpoly/vec2.hpp"

namespace cwpoly {

template <Scalar T>
using Points = std::vector<Vec2<T>>;

/// What ingestion changed on the way to a valid convex polygon.
struct IngestReport {
  bool reversed = false;
  std::size_t duplicates_removed = 0;
  std::size_t collinear_removed = 0;
};

/// Strictly convex and counterclockwise with at least 3 distinct vertices.
template <Scalar T>
class ConvexPolygon {
 public:
  /// Normalizes raw input: drops repeated and collinear vertices, reverses a
  /// clockwise list, then rejects anything that is not convex.
  static ConvexPolygon from_points(Points<T> raw, IngestReport* report = nullptr);

  const Points<T>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Vec2<T>& operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }

 private:
  explicit ConvexPolygon(Points<T> v) : vertices_(std::move(v)) {}
  Points<T> vertices_;
};

/// 2n vertices with opposite sides parallel; a side may collapse to a point
/// when its opposite side has no parallel partner.
template <Scalar T>
struct PairedPolygon {
  Cyclic<Vec2<T>> vertices;
  std::size_t n = 0;

  std::size_t size() const noexcept { return vertices.size(); }
  const Vec2<T>& operator[](std::ptrdiff_t i) const { return vertices[i]; }
};

/// Centrally symmetric (about the origin) strictly convex CCW polygon.
template <Scalar T>
struct CenteredBall {
  Cyclic<Vec2<T>> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t n() const noexcept { return vertices.size() / 2; }
  const Vec2<T>& operator[](std::ptrdiff_t i) const { return vertices[i]; }
};

template <Scalar T>
std::span<const Vec2<T>> as_span(const Cyclic<Vec2<T>>& c) {
  return {c.items().data(), c.items().size()};
}

/// Signed shoelace area: positive iff the list runs counterclockwise.
template <Scalar T>
T polygon_area(std::span<const Vec2<T>> p) {
  T twice(0);
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i) twice += det(p[i], p[(i + 1) % k]);
  return twice / T(2);
}

template <Scalar T>
T polygon_area(const Cyclic<Vec2<T>>& p) {
  return polygon_area(as_span(p));
}

/// Mixed area of two closed polygons with corresponding sides parallel:
/// A(P,Q) = 1/2 sum [Q_i, P_{i+1} - P_i].
template <Scalar T>
T mixed_area(std::span<const Vec2<T>> p, std::span<const Vec2<T>> q) {
  if (p.size() != q.size()) {
    throw GeometryError(ErrorKind::length_mismatch, "mixed_area: polygons differ in length");
  }
  T twice(0);
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i) twice += det(q[i], Vec2<T>(p[(i + 1) % k] - p[i]));
  return twice / T(2);
}

/// The second form 1/2 sum [P_{i+1}, Q_{i+1} - Q_i]; agrees with mixed_area
/// whenever corresponding sides are parallel.
template <Scalar T>
T mixed_area_alt(std::span<const Vec2<T>> p, std::span<const Vec2<T>> q) {
  if (p.size() != q.size()) {
    throw GeometryError(ErrorKind::length_mismatch, "mixed_area: polygons differ in length");
  }
  T twice(0);
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i) {
    twice += det(p[(i + 1) % k], Vec2<T>(q[(i + 1) % k] - q[i]));
  }
  return twice / T(2);
}

template <Scalar T>
T mixed_area(const Cyclic<Vec2<T>>& p, const Cyclic<Vec2<T>>& q) {
  return mixed_area(as_span(p), as_span(q));
}

/// Removes consecutive repeats (cyclically).
template <Scalar T>
Points<T> drop_repeats(std::span<const Vec2<T>> p, std::size_t* removed = nullptr) {
  Points<T> out;
  for (const auto& v : p) {
    if (out.empty() || !same_point(out.back(), v)) out.push_back(v);
  }
  while (out.size() > 1 && same_point(out.front(), out.back())) out.pop_back();
  if (removed) *removed = p.size() - out.size();
  return out;
}

/// Removes vertices whose neighbours are collinear with them.
template <Scalar T>
Points<T> drop_collinear(Points<T> p, std::size_t* removed = nullptr) {
  std::size_t count = 0;
  bool changed = true;
  while (changed && p.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& a = p[(i + p.size() - 1) % p.size()];
      const auto& b = p[i];
      const auto& c = p[(i + 1) % p.size()];
      if (is_zero(det(Vec2<T>(b - a), Vec2<T>(c - b)))) {
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        ++count;
        changed = true;
        break;
      }
    }
  }
  if (removed) *removed = count;
  return p;
}

/// True iff `p` (no repeats) turns left at every vertex and winds exactly once.
template <Scalar T>
bool is_strictly_convex_ccw(std::span<const Vec2<T>> p) {
  const std::size_t k = p.size();
  if (k < 3) return false;
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Vec2<T> e0 = p[(i + 1) % k] - p[i];
    Vec2<T> e1 = p[(i + 2) % k] - p[(i + 1) % k];
    if (sign(det(e0, e1)) <= 0) return false;
    if (!angle_less(e0, e1)) ++wraps;
  }
  return wraps == 1;
}

template <Scalar T>
ConvexPolygon<T> ConvexPolygon<T>::from_points(Points<T> raw, IngestReport* report) {
  IngestReport local;
  for (const auto& v : raw) {
    require_finite(v.x, "polygon input");
    require_finite(v.y, "polygon input");
  }
  Points<T> p = drop_repeats<T>(raw, &local.duplicates_removed);
  if (p.size() < 3) {
    throw GeometryError(ErrorKind::invalid_input, "polygon needs at least 3 distinct vertices");
  }
  T area = polygon_area<T>(p);
  if (is_zero(area)) {
    throw GeometryError(ErrorKind::invalid_input, "polygon has zero area");
  }
  if (sign(area) < 0) {
    std::reverse(p.begin(), p.end());
    local.reversed = true;
  }
  // Spikes (a vertex that doubles back) are collinear too, but they make the
  // polygon non-convex; reject before dropping collinear points.
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vec2<T> e0 = p[(i + 1) % p.size()] - p[i];
    Vec2<T> e1 = p[(i + 2) % p.size()] - p[(i + 1) % p.size()];
    if (is_zero(det(e0, e1)) && sign(dot(e0, e1)) < 0) {
      throw GeometryError(ErrorKind::non_convex, "polygon doubles back on itself");
    }
  }
  p = drop_collinear(std::move(p), &local.collinear_removed);
  if (p.size() < 3) {
    throw GeometryError(ErrorKind::invalid_input, "polygon needs at least 3 effective vertices");
  }
  if (!is_strictly_convex_ccw<T>(p)) {
    throw GeometryError(ErrorKind::non_convex, "polygon is not convex");
  }
  if (report) *report = local;
  return ConvexPolygon(std::move(p));
}

/// Convex hull of pairwise sums for convex CCW vertex lists (a single point
/// or segment is allowed). The result has no repeated or collinear vertices.
template <Scalar T>
Points<T> minkowski_sum(std::span<const Vec2<T>> p_in, std::span<const Vec2<T>> q_in) {
  Points<T> p = drop_repeats(p_in);
  Points<T> q = drop_repeats(q_in);
  if (p.empty() || q.empty()) {
    throw GeometryError(ErrorKind::invalid_input, "minkowski_sum of an empty polygon");
  }
  auto lowest = [](const Points<T>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      int sy = sign(T(v[i].y - v[best].y));
      if (sy < 0 || (sy == 0 && sign(T(v[i].x - v[best].x)) < 0)) best = i;
    }
    return best;
  };
  const std::size_t np = p.size() > 1 ? p.size() : 0;
  const std::size_t nq = q.size() > 1 ? q.size() : 0;
  const std::size_t p0 = lowest(p);
  const std::size_t q0 = lowest(q);
  auto pv = [&](std::size_t i) -> const Vec2<T>& { return p[(p0 + i) % p.size()]; };
  auto qv = [&](std::size_t j) -> const Vec2<T>& { return q[(q0 + j) % q.size()]; };

  Points<T> out;
  std::size_t i = 0;
  std::size_t j = 0;
  out.push_back(pv(0) + qv(0));
  while (i < np || j < nq) {
    if (i == np) {
      ++j;
    } else if (j == nq) {
      ++i;
    } else {
      Vec2<T> ep = pv(i + 1) - pv(i);
      Vec2<T> eq = qv(j + 1) - qv(j);
      if (angle_less(ep, eq)) {
        ++i;
      } else if (angle_less(eq, ep)) {
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    out.push_back(pv(i) + qv(j));
  }
  out.pop_back();  // back at the start
  if (out.empty()) out.push_back(pv(0) + qv(0));
  out = drop_repeats<T>(out);
  if (out.size() >= 3) out = drop_collinear(std::move(out));
  return out;
}

template <Scalar T>
ConvexPolygon<T> minkowski_sum(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q) {
  return ConvexPolygon<T>::from_points(minkowski_sum<T>(p.vertices(), q.vertices()));
}

/// Same polygon up to a cyclic shift of the vertex list.
template <Scalar T>
bool same_cyclic(std::span<const Vec2<T>> a, std::span<const Vec2<T>> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = same_point(a[i], b[(i + shift) % b.size()]);
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Chord-midpoint region test

enum class RegionStatus { exterior_of_m, region_of_m };

struct RegionResult {
  RegionStatus status = RegionStatus::exterior_of_m;
  /// Number of chords of the polygon with the query point as midpoint; a
  /// continuum of parallel chords counts once. Empty when every boundary
  /// point pairs up (the query is the centre of a symmetric polygon).
  std::optional<std::size_t> chords;
  bool inside = false;
};

namespace detail {

template <Scalar T>
struct Piece {
  Vec2<T> a;
  Vec2<T> b;
};

template <Scalar T>
bool on_segment(const Vec2<T>& p, const Vec2<T>& a, const Vec2<T>& b) {
  if (!is_zero(det(Vec2<T>(b - a), Vec2<T>(p - a)))) return false;
  return sign(dot(Vec2<T>(p - a), Vec2<T>(p - b))) <= 0;
}

/// Closed-segment intersection; sets `out` to a point or an overlap segment.
template <Scalar T>
bool intersect_segments(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c, const Vec2<T>& d,
                        Piece<T>& out) {
  Vec2<T> r = b - a;
  Vec2<T> s = d - c;
  Vec2<T> ca = c - a;
  T den = det(r, s);
  if (!is_zero(den)) {
    T t = det(ca, s) / den;
    T u = det(ca, r) / den;
    if (sign(t) < 0 || sign(T(t - 1)) > 0 || sign(u) < 0 || sign(T(u - 1)) > 0) return false;
    Vec2<T> p = a + t * r;
    out = {p, p};
    return true;
  }
  if (!is_zero(det(ca, r))) return false;
  T rr = dot(r, r);
  T t0 = dot(ca, r) / rr;
  T t1 = dot(Vec2<T>(d - a), r) / rr;
  T lo = t0 < t1 ? t0 : t1;
  T hi = t0 < t1 ? t1 : t0;
  if (lo < T(0)) lo = T(0);
  if (hi > T(1)) hi = T(1);
  if (sign(T(hi - lo)) < 0) return false;
  out = {a + lo * r, a + hi * r};
  return true;
}

template <Scalar T>
bool pieces_touch(const Piece<T>& p, const Piece<T>& q) {
  bool p_point = same_point(p.a, p.b);
  bool q_point = same_point(q.a, q.b);
  if (p_point && q_point) return same_point(p.a, q.a);
  if (p_point) return on_segment(p.a, q.a, q.b);
  if (q_point) return on_segment(q.a, p.a, p.b);
  Piece<T> scratch;
  return intersect_segments(p.a, p.b, q.a, q.b, scratch);
}

struct Box {
  double x0, y0, x1, y1;
};

template <Scalar T>
Box box_of(const Vec2<T>& a, const Vec2<T>& b) {
  double ax = to_double(a.x), ay = to_double(a.y), bx = to_double(b.x), by = to_double(b.y);
  return {std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by)};
}

inline bool boxes_apart(const Box& p, const Box& q) {
  // Generous slack: the filter only skips pairs that are far apart in double.
  double slack = 1e-7 * (1.0 + std::max({std::abs(p.x0), std::abs(p.x1), std::abs(p.y0),
                                         std::abs(p.y1), std::abs(q.x0), std::abs(q.x1)}));
  return p.x1 + slack < q.x0 || q.x1 + slack < p.x0 || p.y1 + slack < q.y0 || q.y1 + slack < p.y0;
}

}  // namespace detail

/// Strictly inside a convex CCW polygon (no repeated vertices).
template <Scalar T>
bool strictly_inside(const Vec2<T>& x, std::span<const Vec2<T>> convex) {
  const std::size_t k = convex.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (sign(det(Vec2<T>(convex[(i + 1) % k] - convex[i]), Vec2<T>(x - convex[i]))) <= 0) return false;
  }
  return true;
}

/// Counts chords of the convex polygon having `x` as midpoint by intersecting
/// the boundary with its reflection through `x`. A point is in the exterior
/// of the central equidistant iff it is the midpoint of exactly one chord.
template <Scalar T>
RegionResult point_region_test(const Vec2<T>& x, std::span<const Vec2<T>> convex_in) {
  RegionResult result;
  Points<T> poly = drop_repeats(convex_in);
  if (poly.size() < 3 || !strictly_inside<T>(x, poly)) return result;
  result.inside = true;

  const std::size_t k = poly.size();
  Vec2<T> twice_x = x + x;
  Points<T> refl;
  refl.reserve(k);
  for (const auto& p : poly) refl.push_back(twice_x - p);

  // The reflection of a vertex is a vertex; equal vertex sets mean x is a
  // centre of symmetry.
  bool symmetric = true;
  for (const auto& r : refl) {
    bool found = false;
    for (const auto& p : poly) {
      if (same_point(r, p)) {
        found = true;
        break;
      }
    }
    if (!found) {
      symmetric = false;
      break;
    }
  }
  if (symmetric) {
    result.status = RegionStatus::region_of_m;
    return result;
  }

  std::vector<detail::Box> pbox, rbox;
  for (std::size_t i = 0; i < k; ++i) {
    pbox.push_back(detail::box_of(poly[i], poly[(i + 1) % k]));
    rbox.push_back(detail::box_of(refl[i], refl[(i + 1) % k]));
  }
  std::vector<detail::Piece<T>> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (detail::boxes_apart(pbox[i], rbox[j])) continue;
      detail::Piece<T> piece;
      if (detail::intersect_segments(poly[i], poly[(i + 1) % k], refl[j], refl[(j + 1) % k], piece)) {
        pieces.push_back(piece);
      }
    }
  }

  std::vector<std::size_t> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (find(i) != find(j) && detail::pieces_touch(pieces[i], pieces[j])) parent[find(i)] = find(j);
    }
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) components += (find(i) == i);

  // Components pair up under the reflection, one chord per pair.
  result.chords = components / 2;
  result.status = *result.chords == 1 ? RegionStatus::exterior_of_m : RegionStatus::region_of_m;
  return result;
}

template <Scalar T>
RegionResult point_region_test(const Vec2<T>& x, const PairedPolygon<T>& p) {
  return point_region_test(x, as_span(p.vertices));
}

}  // namespace cwpoly

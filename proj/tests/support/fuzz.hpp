#pragma once

// Seeded generators for test polygons. Vertices are hulls of random integer
// points, built here with a monotone chain so the library's own ingestion is
// not used to make its inputs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cwpoly/cwpoly.hpp"

namespace cwtest {

using cwpoly::Rational;
using Pt = std::pair<long long, long long>;

inline long long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Strictly convex CCW hull (collinear points dropped).
inline std::vector<Pt> hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline cwpoly::Points<Rational> to_points(const std::vector<Pt>& h) {
  cwpoly::Points<Rational> out;
  for (const auto& [x, y] : h) out.push_back({Rational(x), Rational(y)});
  return out;
}

template <class T>
cwpoly::Points<T> convert(const cwpoly::Points<Rational>& p) {
  cwpoly::Points<T> out;
  for (const auto& v : p) out.push_back({cwpoly::scalar_from_rational<T>(v.x), cwpoly::scalar_from_rational<T>(v.y)});
  return out;
}

/// A polygon in paired form with its plane at a = 1/2.
template <class T>
struct Setup {
  cwpoly::PairedPolygon<T> p;
  cwpoly::MinkowskiPlane<T> plane;
  cwpoly::CentralEquidistant<T> cm;
};

template <class T>
Setup<T> make_setup(const cwpoly::Points<T>& raw, const T& a = T(1) / T(2)) {
  auto poly = cwpoly::ConvexPolygon<T>::from_points(raw);
  Setup<T> s;
  s.p = cwpoly::reorder_parallel(poly);
  s.plane = cwpoly::make_plane(s.p, a);
  s.cm = cwpoly::central_equidistant(s.p, s.plane.u);
  return s;
}

/// Random convex polygon whose paired form has n in [min_n, max_n].
inline cwpoly::Points<Rational> random_convex(std::mt19937_64& rng, int min_n = 3, int max_n = 8,
                                              long long radius = 12) {
  std::uniform_int_distribution<long long> coord(-radius, radius);
  std::uniform_int_distribution<int> count(3, 2 * max_n);
  for (;;) {
    std::vector<Pt> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    auto h = hull(pts);
    if (h.size() < 3) continue;
    auto poly = cwpoly::ConvexPolygon<Rational>::from_points(to_points(h));
    auto n = static_cast<int>(cwpoly::reorder_parallel(poly).n);
    if (n >= min_n && n <= max_n) return to_points(h);
  }
}

/// Random origin-symmetric strictly convex polygon with 2n vertices.
inline cwpoly::CenteredBall<Rational> random_centered(std::mt19937_64& rng, int max_n = 8, long long radius = 12) {
  std::uniform_int_distribution<long long> coord(-radius, radius);
  std::uniform_int_distribution<int> count(2, max_n);
  for (;;) {
    std::vector<Pt> pts;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Pt p{coord(rng), coord(rng)};
      pts.push_back(p);
      pts.push_back({-p.first, -p.second});
    }
    auto h = hull(pts);
    if (h.size() < 4) continue;
    return cwpoly::CenteredBall<Rational>{cwpoly::Cyclic<cwpoly::Vec2<Rational>>(to_points(h))};
  }
}

/// Uniform rational in (0, hi] with denominator `den`.
inline Rational random_positive(std::mt19937_64& rng, long long hi = 2, long long den = 16) {
  std::uniform_int_distribution<long long> num(1, hi * den);
  return Rational(num(rng), den);
}

}  // namespace cwtest

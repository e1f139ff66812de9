#pragma once

// Central equidistant M of a constant-width polygon and the equidistant
// family P(c) = M + cU, with V-lengths and the half-polygon identities.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwpoly/ball.hpp"

namespace cwpoly {

/// Solves X_{i+1} - X_i = coef_i (B_{i+1} - B_i) for every slot i. Both
/// coordinates must give the same ratio; otherwise the edge is not parallel.
template <Scalar T>
EdgeIndexed<T> edge_coefficients(const Cyclic<Vec2<T>>& x, const Cyclic<Vec2<T>>& b) {
  if (x.size() != b.size()) {
    throw GeometryError(ErrorKind::length_mismatch, "edge_coefficients: lists differ in length");
  }
  const auto m = static_cast<std::ptrdiff_t>(x.size());
  std::vector<T> out;
  out.reserve(x.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    T t;
    if (!solve_multiple(Vec2<T>(x[i + 1] - x[i]), Vec2<T>(b[i + 1] - b[i]), t)) {
      throw GeometryError(ErrorKind::not_parallel, "edge " + std::to_string(i) + " is not parallel to the ball edge");
    }
    out.push_back(t);
  }
  return EdgeIndexed<T>(std::move(out));
}

/// beta_i = 1/2 sum_{j=i}^{i+n-1} coef_j [B_j, B_{j+1}], evaluated by a
/// running window so the whole ladder costs O(n).
template <Scalar T>
Cyclic<T> beta_ladder(const EdgeIndexed<T>& coef, const Cyclic<Vec2<T>>& b) {
  const auto m = static_cast<std::ptrdiff_t>(coef.size());
  const auto n = m / 2;
  std::vector<T> weighted;
  weighted.reserve(coef.size());
  for (std::ptrdiff_t j = 0; j < m; ++j) weighted.push_back(coef[j] * det(b[j], b[j + 1]));
  Cyclic<T> w(std::move(weighted));

  T window(0);
  for (std::ptrdiff_t j = 0; j < n; ++j) window += w[j];
  std::vector<T> out;
  out.reserve(coef.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    out.push_back(window / T(2));
    window += w[i + n];
    window -= w[i];
  }
  return Cyclic<T>(std::move(out));
}

template <Scalar T>
struct CentralEquidistant {
  Cyclic<Vec2<T>> m;       // 2n vertices with m[i + n] == m[i]
  EdgeIndexed<T> alphas;   // M_{i+1} - M_i = alpha_i (U_{i+1} - U_i)
  Cyclic<T> betas;
  std::size_t n = 0;
  bool degenerate = false;  // M is a single point (P centrally symmetric)
};

template <Scalar T>
CentralEquidistant<T> central_equidistant(const PairedPolygon<T>& p, const CenteredBall<T>& u) {
  if (p.size() != u.size()) {
    throw GeometryError(ErrorKind::length_mismatch, "central_equidistant: P and U differ in length");
  }
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  const auto n = static_cast<std::ptrdiff_t>(p.n);
  std::vector<Vec2<T>> mid;
  mid.reserve(p.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) mid.push_back(midpoint(p[i], p[i + n]));

  CentralEquidistant<T> out;
  out.m = Cyclic<Vec2<T>>(std::move(mid));
  out.n = p.n;
  out.alphas = edge_coefficients(out.m, u.vertices);
  out.betas = beta_ladder(out.alphas, u.vertices);
  out.degenerate = true;
  for (const auto& a : out.alphas) out.degenerate = out.degenerate && is_zero(a);
  return out;
}

/// P_i(c) = M_i + c U_i. Not validated: small or negative c gives cusps.
template <Scalar T>
PairedPolygon<T> equidistant(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, const T& c) {
  const auto m = static_cast<std::ptrdiff_t>(cm.m.size());
  std::vector<Vec2<T>> out;
  out.reserve(cm.m.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) out.push_back(cm.m[i] + c * u[i]);
  return PairedPolygon<T>{Cyclic<Vec2<T>>(std::move(out)), cm.n};
}

/// Signed V-lengths lambda_i of every edge of a closed 2n-list:
/// X_{i+1} - X_i = lambda_i V_i.
template <Scalar T>
EdgeIndexed<T> v_lengths(const Cyclic<Vec2<T>>& x, const CenteredBall<T>& v) {
  if (x.size() != v.size()) {
    throw GeometryError(ErrorKind::length_mismatch, "v_lengths: polygon and V differ in length");
  }
  const auto m = static_cast<std::ptrdiff_t>(x.size());
  std::vector<T> out;
  out.reserve(x.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    T t;
    if (!solve_multiple(Vec2<T>(x[i + 1] - x[i]), v[i], t)) {
      throw GeometryError(ErrorKind::not_parallel, "edge " + std::to_string(i) + " is not parallel to V");
    }
    out.push_back(t);
  }
  return EdgeIndexed<T>(std::move(out));
}

/// V-length of an open arc whose edge j runs along V[j + edge_offset].
template <Scalar T>
T v_length(std::span<const Vec2<T>> arc, const CenteredBall<T>& v, std::ptrdiff_t edge_offset = 0) {
  T total(0);
  for (std::size_t j = 0; j + 1 < arc.size(); ++j) {
    T t;
    const auto slot = static_cast<std::ptrdiff_t>(j) + edge_offset;
    if (!solve_multiple(Vec2<T>(arc[j + 1] - arc[j]), v[slot], t)) {
      throw GeometryError(ErrorKind::not_parallel, "arc edge " + std::to_string(j) + " is not parallel to V");
    }
    total += t;
  }
  return total;
}

/// V-length of a closed 2n-list.
template <Scalar T>
T v_length(const Cyclic<Vec2<T>>& closed, const CenteredBall<T>& v) {
  T total(0);
  for (const auto& t : v_lengths(closed, v)) total += t;
  return total;
}

template <Scalar T>
struct ExpectedActual {
  T expected{};
  T actual{};
  bool agree() const { return same(expected, actual); }
};

/// Barbier: the c-equidistant has V-length 2c A(U).
template <Scalar T>
ExpectedActual<T> barbier(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, const CenteredBall<T>& v,
                          const T& c) {
  ExpectedActual<T> r;
  r.expected = T(2) * c * polygon_area(u.vertices);
  r.actual = v_length(equidistant(cm, u, c).vertices, v);
  return r;
}

/// V-length of the half arc P_i(c) ... P_{i+n}(c).
template <Scalar T>
T half_arc_length(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, const CenteredBall<T>& v,
                  std::ptrdiff_t i, const T& c) {
  auto pc = equidistant(cm, u, c);
  const auto n = static_cast<std::ptrdiff_t>(cm.n);
  std::vector<Vec2<T>> arc;
  for (std::ptrdiff_t j = i; j <= i + n; ++j) arc.push_back(pc[j]);
  return v_length<T>(arc, v, i);
}

/// Closed form of the half arc length: c A(U) + 2 beta_i.
template <Scalar T>
T half_arc_length_formula(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, std::ptrdiff_t i,
                          const T& c) {
  return c * polygon_area(u.vertices) + T(2) * cm.betas[i];
}

/// Cusp vertices of a front whose edge i runs along coef_i times a
/// monotonically turning direction: vertex i is a cusp when the coefficients
/// on either side have opposite signs. A run of zero coefficients (vertices
/// that coincide) is skipped and reported at its first vertex. Only indices
/// in [0, n) are returned since the coefficients are antiperiodic.
struct CuspReport {
  std::vector<std::size_t> indices;
  bool degenerate = false;
  std::size_t count() const { return indices.size(); }
};

template <Scalar T>
CuspReport sign_change_vertices(const EdgeIndexed<T>& coef) {
  CuspReport r;
  const auto m = static_cast<std::ptrdiff_t>(coef.size());
  const auto n = m / 2;
  bool any = false;
  for (const auto& c : coef) any = any || !is_zero(c);
  if (!any) {
    r.degenerate = true;
    return r;
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (is_zero(coef[i - 1])) continue;
    std::ptrdiff_t j = i;
    while (is_zero(coef[j])) ++j;
    if (sign(coef[i - 1]) * sign(coef[j]) < 0) r.indices.push_back(static_cast<std::size_t>(i));
  }
  return r;
}

template <Scalar T>
CuspReport cusps_of_m(const CentralEquidistant<T>& cm) {
  return sign_change_vertices(cm.alphas);
}

template <Scalar T>
struct HalfAreas {
  T a1{};
  T a2{};
  T four_c_beta{};
};

/// Areas of the two pieces of P(c) cut by the diagonal P_i P_{i+n}.
template <Scalar T>
HalfAreas<T> half_area_identity(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, std::ptrdiff_t i,
                                const T& c) {
  auto pc = equidistant(cm, u, c);
  const auto n = static_cast<std::ptrdiff_t>(cm.n);
  std::vector<Vec2<T>> first, second;
  for (std::ptrdiff_t j = i; j <= i + n; ++j) first.push_back(pc[j]);
  for (std::ptrdiff_t j = i + n; j <= i + 2 * n; ++j) second.push_back(pc[j]);
  HalfAreas<T> r;
  r.a1 = polygon_area<T>(first);
  r.a2 = polygon_area<T>(second);
  r.four_c_beta = T(4) * c * cm.betas[i];
  return r;
}

template <Scalar T>
struct ChakerianResult {
  std::vector<T> values;  // A1(i, c) - c L_V(i, c) for i in [0, n)
  bool constant = false;
  T closed_lhs{};         // 2c L_V(0, c) - 2 A1(0, c)
  T closed_rhs{};         // 2c^2 A(U) - A(P(c))
};

/// A1(i, c) - c L_V(i, c) does not depend on i.
template <Scalar T>
ChakerianResult<T> chakerian(const CentralEquidistant<T>& cm, const CenteredBall<T>& u, const CenteredBall<T>& v,
                             const T& c) {
  ChakerianResult<T> r;
  const auto n = static_cast<std::ptrdiff_t>(cm.n);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    T a1 = half_area_identity(cm, u, i, c).a1;
    r.values.push_back(a1 - c * half_arc_length(cm, u, v, i, c));
  }
  r.constant = true;
  for (const auto& value : r.values) r.constant = r.constant && same(value, r.values.front());
  T a1 = half_area_identity(cm, u, 0, c).a1;
  r.closed_lhs = T(2) * c * half_arc_length(cm, u, v, 0, c) - T(2) * a1;
  r.closed_rhs = T(2) * c * c * polygon_area(u.vertices) - polygon_area(equidistant(cm, u, c).vertices);
  return r;
}

/// Largest |alpha|; P(c) is convex exactly when c is at least this value.
template <Scalar T>
T convexity_threshold(const EdgeIndexed<T>& alphas) {
  T best(0);
  for (const auto& a : alphas) {
    T mag = abs_value(a);
    if (mag > best) best = mag;
  }
  return best;
}

}  // namespace cwpoly

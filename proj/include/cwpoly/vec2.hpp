#pragma once

#include <cmath>
#include <ostream>

#include "cwpoly/scalar.hpp"

namespace cwpoly {

template <Scalar T>
struct Vec2 {
  T x{};
  T y{};

  Vec2() = default;
  Vec2(T x_, T y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator-(const Vec2& a) { return {T(-a.x), T(-a.y)}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {T(s * a.x), T(s * a.y)}; }
  friend Vec2 operator*(const Vec2& a, const T& s) { return {T(a.x * s), T(a.y * s)}; }
  friend Vec2 operator/(const Vec2& a, const T& s) { return {T(a.x / s), T(a.y / s)}; }

  // Bitwise equality; use `same_point` for the backend's tolerance.
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

  friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << to_string(v.x) << ", " << to_string(v.y) << ')';
  }
};

/// The determinant [u, v] of a pair of planar vectors.
template <Scalar T>
T det(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.y - u.y * v.x;
}

template <Scalar T>
T dot(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.x + u.y * v.y;
}

template <Scalar T>
bool same_point(const Vec2<T>& a, const Vec2<T>& b) {
  return same(a.x, b.x) && same(a.y, b.y);
}

template <Scalar T>
bool is_zero(const Vec2<T>& v) {
  return is_zero(v.x) && is_zero(v.y);
}

template <Scalar T>
Vec2<double> to_double(const Vec2<T>& v) {
  return {to_double(v.x), to_double(v.y)};
}

template <Scalar T>
Vec2<T> midpoint(const Vec2<T>& a, const Vec2<T>& b) {
  return (a + b) / T(2);
}

template <Scalar T>
T squared_distance(const Vec2<T>& a, const Vec2<T>& b) {
  Vec2<T> d = a - b;
  return dot(d, d);
}

/// Position of a direction on the circle: 0 for angles in [0, pi), 1 for [pi, 2pi).
template <Scalar T>
int half_turn(const Vec2<T>& v) {
  int sy = sign(v.y);
  return (sy > 0 || (sy == 0 && sign(v.x) > 0)) ? 0 : 1;
}

/// Strict polar-angle order on nonzero vectors, angles measured in [0, 2pi).
template <Scalar T>
bool angle_less(const Vec2<T>& a, const Vec2<T>& b) {
  int ha = half_turn(a);
  int hb = half_turn(b);
  if (ha != hb) return ha < hb;
  return sign(det(a, b)) > 0;
}

/// u and v are parallel and point the same way (zero vectors excluded).
template <Scalar T>
bool same_direction(const Vec2<T>& u, const Vec2<T>& v) {
  return is_zero(det(u, v)) && sign(dot(u, v)) > 0;
}

/// Solves d = t * e for t when d is parallel to e (e nonzero). Returns false
/// if the two coordinates disagree, i.e. d is not a multiple of e.
template <Scalar T>
bool solve_multiple(const Vec2<T>& d, const Vec2<T>& e, T& t) {
  if (!is_zero(e.x) && (ScalarTraits<T>::exact || std::abs(to_double(e.x)) >= std::abs(to_double(e.y)))) {
    t = d.x / e.x;
  } else if (!is_zero(e.y)) {
    t = d.y / e.y;
  } else {
    return false;
  }
  return same(d.x, T(t * e.x)) && same(d.y, T(t * e.y));
}

}  // namespace cwpoly

#pragma once

#include <array>
#include <string>

#include "cevian/errors.hpp"
#include "cevian/rational.hpp"

namespace cevian {

namespace detail {

inline std::array<Int, 3> cross(const std::array<Int, 3>& p, const std::array<Int, 3>& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

inline Int det3(const std::array<Int, 3>& a, const std::array<Int, 3>& b,
                const std::array<Int, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline bool proportional(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

inline std::array<Int, 3> canonical_int_triple(std::array<Int, 3> t) {
  Int g = gcd(gcd(t[0], t[1]), t[2]);
  if (g != 0)
    for (auto& v : t) v /= g;
  for (const auto& v : t) {
    if (v != 0) {
      if (v < 0)
        for (auto& w : t) w = -w;
      break;
    }
  }
  return t;
}

}  // namespace detail

/// Point in homogeneous coordinates, stored canonically: coprime integers,
/// first nonzero coordinate positive. z = 0 encodes points at infinity.
class ProjPoint {
 public:
  ProjPoint(const Rat& x, const Rat& y, const Rat& z)
      : c_(detail::canonical_int_triple(canonical_triple(x, y, z))) {
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0)
      throw DegenerateInput("ProjPoint: zero triple");
  }
  explicit ProjPoint(std::array<Int, 3> t) : c_(detail::canonical_int_triple(std::move(t))) {
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0)
      throw DegenerateInput("ProjPoint: zero triple");
  }
  /// Finite Cartesian point embedded in the chart z = 1.
  ProjPoint(const Rat& x, const Rat& y) : ProjPoint(x, y, Rat(1)) {}

  const Int& x() const { return c_[0]; }
  const Int& y() const { return c_[1]; }
  const Int& z() const { return c_[2]; }
  const std::array<Int, 3>& triple() const { return c_; }

  bool is_finite() const { return c_[2] != 0; }
  Rat cart_x() const {
    Rat r(c_[0], c_[2]);
    r.canonicalize();
    return r;
  }
  Rat cart_y() const {
    Rat r(c_[1], c_[2]);
    r.canonicalize();
    return r;
  }

  std::string str() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
  }

 private:
  std::array<Int, 3> c_;
};

/// Line u*x + v*y + w*z = 0, same canonical storage as ProjPoint.
class ProjLine {
 public:
  ProjLine(const Rat& u, const Rat& v, const Rat& w)
      : c_(detail::canonical_int_triple(canonical_triple(u, v, w))) {
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0)
      throw DegenerateInput("ProjLine: zero triple");
  }
  explicit ProjLine(std::array<Int, 3> t) : c_(detail::canonical_int_triple(std::move(t))) {
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0)
      throw DegenerateInput("ProjLine: zero triple");
  }

  const Int& u() const { return c_[0]; }
  const Int& v() const { return c_[1]; }
  const Int& w() const { return c_[2]; }
  const std::array<Int, 3>& triple() const { return c_; }

  std::string str() const {
    return "[" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + "]";
  }

 private:
  std::array<Int, 3> c_;
};

inline bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
  return detail::proportional(p.triple(), q.triple());
}

inline bool proj_equal(const ProjLine& l, const ProjLine& m) {
  return detail::proportional(l.triple(), m.triple());
}

/// Exact incidence residual u*x + v*y + w*z.
inline Int incidence(const ProjPoint& p, const ProjLine& l) {
  const auto& a = p.triple();
  const auto& b = l.triple();
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline bool incident(const ProjPoint& p, const ProjLine& l) { return incidence(p, l) == 0; }

/// Line through two distinct points (cross product of the triples).
inline ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (proj_equal(p, q)) throw CoincidentPoints();
  return ProjLine(detail::cross(p.triple(), q.triple()));
}

/// Intersection of two distinct lines. Parallel finite lines meet at z = 0.
inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (proj_equal(l, m)) throw CoincidentLines();
  return ProjPoint(detail::cross(l.triple(), m.triple()));
}

inline Int collinearity_det(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return detail::det3(p.triple(), q.triple(), r.triple());
}

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return collinearity_det(p, q, r) == 0;
}

inline Int concurrency_det(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return detail::det3(l.triple(), m.triple(), n.triple());
}

inline bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return concurrency_det(l, m, n) == 0;
}

}  // namespace cevian

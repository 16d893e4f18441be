#pragma once

#include <array>
#include <string>
#include <vector>

#include "cevian/errors.hpp"
#include "cevian/projective.hpp"
#include "cevian/rational.hpp"

namespace cevian {

namespace detail {

/// Six entries of a symmetric 3x3 integer matrix, order
/// (m00, m11, m22, m01, m02, m12), canonical up to scale.
using Sym6 = std::array<Int, 6>;

inline Sym6 canonical_sym6(Sym6 m) {
  Int g(0);
  for (const auto& v : m) g = gcd(g, v);
  if (g != 0)
    for (auto& v : m) v /= g;
  for (const auto& v : m) {
    if (v != 0) {
      if (v < 0)
        for (auto& w : m) w = -w;
      break;
    }
  }
  return m;
}

inline Int sym6_quad(const Sym6& m, const std::array<Int, 3>& p) {
  return m[0] * p[0] * p[0] + m[1] * p[1] * p[1] + m[2] * p[2] * p[2] +
         2 * (m[3] * p[0] * p[1] + m[4] * p[0] * p[2] + m[5] * p[1] * p[2]);
}

inline Int sym6_det(const Sym6& m) {
  // | m00 m01 m02 |
  // | m01 m11 m12 |
  // | m02 m12 m22 |
  return m[0] * (m[1] * m[2] - m[5] * m[5]) - m[3] * (m[3] * m[2] - m[5] * m[4]) +
         m[4] * (m[3] * m[5] - m[1] * m[4]);
}

inline Sym6 sym6_adjugate(const Sym6& m) {
  const Int &a = m[0], &b = m[1], &c = m[2], &d = m[3], &e = m[4], &f = m[5];
  Sym6 adj;
  adj[0] = b * c - f * f;  // cofactor (0,0)
  adj[1] = a * c - e * e;
  adj[2] = a * b - d * d;
  adj[3] = e * f - d * c;  // (0,1)
  adj[4] = d * f - e * b;  // (0,2)
  adj[5] = d * e - a * f;  // (1,2)
  return adj;
}

/// Exact determinant of an n x n rational matrix by ordered Gaussian
/// elimination (no pivot search; rows swapped only past zero pivots).
inline Rat rat_det(std::vector<std::array<Rat, 6>> m, int n) {
  Rat d(1);
  for (int i = 0; i < n; ++i) {
    int piv = -1;
    for (int r = i; r < n; ++r)
      if (m[r][i] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != i) {
      std::swap(m[piv], m[i]);
      d = -d;
    }
    d *= m[i][i];
    for (int r = i + 1; r < n; ++r) {
      if (m[r][i] == 0) continue;
      Rat f = m[r][i] / m[i][i];
      for (int c = i; c < n; ++c) m[r][c] -= f * m[i][c];
    }
  }
  return d;
}

}  // namespace detail

/// Point conic p^T M p = 0, M symmetric and stored up to scale.
class Conic {
 public:
  explicit Conic(detail::Sym6 m) : m_(detail::canonical_sym6(std::move(m))) {
    bool all_zero = true;
    for (const auto& v : m_) all_zero = all_zero && v == 0;
    if (all_zero) throw DegenerateInput("Conic: zero matrix");
  }

  const detail::Sym6& sym() const { return m_; }
  Int det() const { return detail::sym6_det(m_); }
  bool nondegenerate() const { return det() != 0; }
  Int residual(const ProjPoint& p) const { return detail::sym6_quad(m_, p.triple()); }

 private:
  detail::Sym6 m_;
};

/// Line conic: l is tangent iff l^T M* l = 0.
class DualConic {
 public:
  explicit DualConic(detail::Sym6 m) : m_(detail::canonical_sym6(std::move(m))) {
    bool all_zero = true;
    for (const auto& v : m_) all_zero = all_zero && v == 0;
    if (all_zero) throw DegenerateInput("DualConic: zero matrix");
  }

  const detail::Sym6& sym() const { return m_; }
  Int det() const { return detail::sym6_det(m_); }
  Int residual(const ProjLine& l) const { return detail::sym6_quad(m_, l.triple()); }

 private:
  detail::Sym6 m_;
};

inline bool on_conic(const ProjPoint& p, const Conic& c) { return c.residual(p) == 0; }

inline bool is_tangent(const ProjLine& l, const DualConic& d) { return d.residual(l) == 0; }

/// Adjugate transfer between the point and line views of a conic.
inline DualConic dual_conic(const Conic& c) {
  if (c.det() == 0) throw DegenerateConic();
  return DualConic(detail::sym6_adjugate(c.sym()));
}

inline Conic primal_conic(const DualConic& d) {
  if (d.det() == 0) throw DegenerateConic();
  return Conic(detail::sym6_adjugate(d.sym()));
}

namespace detail {

/// Row of the quadratic-form system for one triple: residual is
/// row . (m00, m11, m22, m01, m02, m12).
inline std::array<Rat, 6> veronese_row(const std::array<Int, 3>& p) {
  return {Rat(p[0] * p[0]), Rat(p[1] * p[1]), Rat(p[2] * p[2]),
          Rat(2 * p[0] * p[1]), Rat(2 * p[0] * p[2]), Rat(2 * p[1] * p[2])};
}

/// One-dimensional nullspace of a 5x6 rational system. Throws when the
/// nullity is >= 2 (inputs fail to determine a unique conic).
inline Sym6 nullspace_5x6(std::vector<std::array<Rat, 6>> m) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int ri = 0;
  for (int c = 0; c < 6 && ri < rows; ++c) {
    int piv = -1;
    for (int r = ri; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[ri]);
    for (int r = 0; r < rows; ++r) {
      if (r == ri || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[ri][c];
      for (int cc = 0; cc < 6; ++cc) m[r][cc] -= f * m[ri][cc];
    }
    pivot_col.push_back(c);
    ++ri;
  }
  if (static_cast<int>(pivot_col.size()) != 5)
    throw DegenerateInput("conic system has nullity >= 2");
  int free_col = 0;
  {
    std::array<bool, 6> is_pivot{};
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < 6; ++c)
      if (!is_pivot[c]) {
        free_col = c;
        break;
      }
  }
  std::array<Rat, 6> sol{};
  sol[free_col] = 1;
  for (int i = 0; i < 5; ++i) sol[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
  // clear denominators into a canonical integer 6-tuple
  Int l(1);
  for (const auto& v : sol) l = lcm(l, v.get_den());
  Sym6 out;
  for (int i = 0; i < 6; ++i) out[i] = sol[i].get_num() * (l / sol[i].get_den());
  return canonical_sym6(out);
}

}  // namespace detail

/// Unique conic through five points in general position.
inline Conic conic_through_points(const std::array<ProjPoint, 5>& pts) {
  std::vector<std::array<Rat, 6>> rows;
  rows.reserve(5);
  for (const auto& p : pts) rows.push_back(detail::veronese_row(p.triple()));
  return Conic(detail::nullspace_5x6(std::move(rows)));
}

/// Unique conic tangent to five lines in general position, as a dual conic.
inline DualConic conic_tangent_to_lines(const std::array<ProjLine, 5>& lines) {
  std::vector<std::array<Rat, 6>> rows;
  rows.reserve(5);
  for (const auto& l : lines) rows.push_back(detail::veronese_row(l.triple()));
  return DualConic(detail::nullspace_5x6(std::move(rows)));
}

/// 6x6 Veronese determinant; zero iff some conic (possibly degenerate)
/// passes through all six points.
inline Rat conconic6_det(const std::array<ProjPoint, 6>& pts) {
  std::vector<std::array<Rat, 6>> m;
  m.reserve(6);
  for (const auto& p : pts) {
    const auto& t = p.triple();
    m.push_back({Rat(t[0] * t[0]), Rat(t[1] * t[1]), Rat(t[2] * t[2]), Rat(t[0] * t[1]),
                 Rat(t[0] * t[2]), Rat(t[1] * t[2])});
  }
  return detail::rat_det(std::move(m), 6);
}

inline bool conconic6(const std::array<ProjPoint, 6>& pts) { return conconic6_det(pts) == 0; }

/// Signed side ratio of a trace given in barycentrics with a zero at
/// `side_index` (0: point (0:y:z) on BC, ratio z/y; 1: (x:0:z) on CA,
/// ratio x/z; 2: (x:y:0) on AB, ratio y/x). Ratios follow the cyclic
/// Ceva orientation B->C, C->A, A->B.
inline Rat signed_trace_ratio(const std::array<Int, 3>& bary, int side_index) {
  const Int* num = nullptr;
  const Int* den = nullptr;
  switch (side_index) {
    case 0: num = &bary[2]; den = &bary[1]; break;
    case 1: num = &bary[0]; den = &bary[2]; break;
    default: num = &bary[1]; den = &bary[0]; break;
  }
  if (*den == 0 || *num == 0) throw TraceAtVertex();
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

/// Product of the three signed ratio pairs of six side traces given as
/// barycentric triples (two per side, in side order BC, CA, AB).
/// Equals 1 iff the six traces lie on one conic.
inline Rat carnot_product(const std::array<std::array<Int, 3>, 6>& traces) {
  Rat prod(1);
  for (int side = 0; side < 3; ++side) {
    prod *= signed_trace_ratio(traces[2 * side], side);
    prod *= signed_trace_ratio(traces[2 * side + 1], side);
  }
  return prod;
}

}  // namespace cevian

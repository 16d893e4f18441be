#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cevian/errors.hpp"

namespace cevian::morley {

/// Comparison tolerance on sum-normalized barycentrics. Trig values are
/// irrational, so this module is numeric by necessity.
constexpr double kTolerance = 1e-9;

/// Window around k = 0 and k = 1 inside which the closed limit formulas
/// replace the generic sine ratio.
constexpr double kLimitWindow = 1e-7;

struct Vec2 {
  double x = 0, y = 0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double cross2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Numeric triangle: Cartesian vertices and derived angles.
struct NumTri {
  Vec2 A, B, C;
  double angA = 0, angB = 0, angC = 0;

  NumTri(Vec2 a, Vec2 b, Vec2 c) : A(a), B(b), C(c) {
    const double la = norm(B - C), lb = norm(C - A), lc = norm(A - B);
    angA = std::acos(std::clamp((lb * lb + lc * lc - la * la) / (2 * lb * lc), -1.0, 1.0));
    angB = std::acos(std::clamp((la * la + lc * lc - lb * lb) / (2 * la * lc), -1.0, 1.0));
    angC = M_PI - angA - angB;
    if (!(angA > 0 && angB > 0 && angC > 0))
      throw DegenerateInput("NumTri: degenerate triangle");
  }

  std::array<double, 3> angles() const { return {angA, angB, angC}; }
  double orientation() const { return cross2(B - A, C - A) > 0 ? 1.0 : -1.0; }
};

/// Floating barycentric triple normalized to x + y + z = 1.
struct NumBary {
  double x = 0, y = 0, z = 0;

  NumBary() = default;
  NumBary(double xx, double yy, double zz) {
    const double s = xx + yy + zz;
    x = xx / s;
    y = yy / s;
    z = zz / s;
  }

  Vec2 cartesian(const NumTri& t) const {
    return {x * t.A.x + y * t.B.x + z * t.C.x, x * t.A.y + y * t.B.y + z * t.C.y};
  }
};

inline double bary_distance(const NumBary& a, const NumBary& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline NumBary bary_of_point(const NumTri& t, Vec2 p) {
  return NumBary(cross2(t.B - p, t.C - p), cross2(t.C - p, t.A - p), cross2(t.A - p, t.B - p));
}

/// Isogonal conjugate in the numeric chart: (a^2/x : b^2/y : c^2/z).
inline NumBary isogonal_conjugate(const NumTri& t, const NumBary& b) {
  const double a2 = std::pow(norm(t.B - t.C), 2), b2 = std::pow(norm(t.C - t.A), 2),
               c2 = std::pow(norm(t.A - t.B), 2);
  return NumBary(a2 * b.y * b.z, b2 * b.x * b.z, c2 * b.x * b.y);
}

// -- classic centers from side lengths --------------------------------------

inline NumBary incenter(const NumTri& t) {
  return NumBary(norm(t.B - t.C), norm(t.C - t.A), norm(t.A - t.B));
}

inline NumBary centroid(const NumTri&) { return NumBary(1, 1, 1); }

inline NumBary orthocenter(const NumTri& t) {
  return NumBary(std::tan(t.angA), std::tan(t.angB), std::tan(t.angC));
}

inline NumBary circumcenter(const NumTri& t) {
  return NumBary(std::sin(2 * t.angA), std::sin(2 * t.angB), std::sin(2 * t.angC));
}

inline NumBary gergonne_point(const NumTri& t) {
  const double a = norm(t.B - t.C), b = norm(t.C - t.A), c = norm(t.A - t.B);
  const double s = (a + b + c) / 2;
  return NumBary(1 / (s - a), 1 / (s - b), 1 / (s - c));
}

// -- the R(k) family --------------------------------------------------------

/// Closed limit at k = 0: (angle A : angle B : angle C).
inline NumBary r_zero(const NumTri& t) { return NumBary(t.angA, t.angB, t.angC); }

/// Closed limit at k = 1: (sin^2 A / A : sin^2 B / B : sin^2 C / C).
inline NumBary r_one(const NumTri& t) {
  auto f = [](double a) { return std::sin(a) * std::sin(a) / a; };
  return NumBary(f(t.angA), f(t.angB), f(t.angC));
}

/// Concurrency point of the k-family cevians:
/// ( sin A sin(kA)/sin((1-k)A) : ... ), with the removable singularities
/// at k = 0 and k = 1 replaced by their closed limits.
inline NumBary r_of_k(const NumTri& t, double k) {
  if (std::abs(k) < kLimitWindow) return r_zero(t);
  if (std::abs(1 - k) < kLimitWindow) return r_one(t);
  auto f = [k](double a) { return std::sin(a) * std::sin(a * k) / std::sin(a * (1 - k)); };
  return NumBary(f(t.angA), f(t.angB), f(t.angC));
}

/// Concurrency point of the perpendicular-foot cevians:
/// (tan(kA) : tan(kB) : tan(kC)), limit (A : B : C) at k = 0.
inline NumBary d_of_k(const NumTri& t, double k) {
  if (std::abs(k) < kLimitWindow) return r_zero(t);
  for (double a : t.angles())
    if (std::abs(std::abs(k) * a - M_PI / 2) < 1e-9) throw TangentPole();
  return NumBary(std::tan(t.angA * k), std::tan(t.angB * k), std::tan(t.angC * k));
}

// -- constructive configuration ---------------------------------------------

using Line = std::array<double, 3>;  // ux + vy + w = 0, homogeneous

inline Line line_through(Vec2 p, Vec2 d) { return {-d.y, d.x, d.y * p.x - d.x * p.y}; }

inline Vec2 meet_lines(const Line& l, const Line& m, const char* what) {
  const double det = l[0] * m[1] - l[1] * m[0];
  if (std::abs(det) < 1e-14 * (std::abs(l[0] * m[1]) + std::abs(l[1] * m[0]) + 1e-300))
    throw RayMiss(std::string("parallel rays at ") + what);
  return {(l[1] * m[2] - l[2] * m[1]) / det, (l[2] * m[0] - l[0] * m[2]) / det};
}

inline Vec2 rotate(Vec2 v, double th) {
  const double c = std::cos(th), s = std::sin(th);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Hexagon, R, R', Q of the angle-parametrized construction. The cevian
/// l_A leaves A at angle k*angA from side AB toward the interior (away
/// from it for k < 0), and l'_A symmetrically from AC.
struct NumConfig {
  Vec2 X, Y, Z, Xp, Yp, Zp;
  Vec2 R, Rp, Q;
};

inline NumConfig build_numeric_config(const NumTri& t, double k) {
  if (!(k > -1 && k < 1) || k == 0)
    throw DegenerateInput("build_numeric_config: k outside (-1,1) or zero");
  const double s = t.orientation();
  auto unit = [](Vec2 v) { return (1.0 / norm(v)) * v; };
  auto pencil = [&](Vec2 V, Vec2 toward1, Vec2 toward2, double ang) {
    Line l = line_through(V, rotate(unit(toward1 - V), s * k * ang));
    Line lp = line_through(V, rotate(unit(toward2 - V), -s * k * ang));
    return std::pair<Line, Line>(l, lp);
  };
  auto [lA, lAp] = pencil(t.A, t.B, t.C, t.angA);
  auto [lB, lBp] = pencil(t.B, t.C, t.A, t.angB);
  auto [lC, lCp] = pencil(t.C, t.A, t.B, t.angC);

  NumConfig c;
  c.X = meet_lines(lB, lCp, "X");
  c.Y = meet_lines(lC, lAp, "Y");
  c.Z = meet_lines(lA, lBp, "Z");
  c.Xp = meet_lines(lBp, lC, "X'");
  c.Yp = meet_lines(lCp, lA, "Y'");
  c.Zp = meet_lines(lAp, lB, "Z'");

  auto join2 = [](Vec2 p, Vec2 q) { return line_through(p, q - p); };
  c.R = meet_lines(join2(t.A, c.X), join2(t.B, c.Y), "R");
  c.Rp = meet_lines(join2(t.A, c.Xp), join2(t.B, c.Yp), "R'");
  // Q from the two best-separated hexagon diagonals
  const double dxx = norm(c.X - c.Xp), dyy = norm(c.Y - c.Yp), dzz = norm(c.Z - c.Zp);
  if (dxx < 1e-12 && dyy < 1e-12 && dzz < 1e-12) {
    c.Q = c.R;  // fully collapsed (k = 1/2: every point is the incenter)
  } else {
    Line d1 = join2(c.X, c.Xp), d2 = join2(c.Y, c.Yp);
    if (dxx < dzz) d1 = join2(c.Z, c.Zp);
    else if (dyy < dzz) d2 = join2(c.Z, c.Zp);
    c.Q = meet_lines(d1, d2, "Q");
  }
  return c;
}

inline NumBary q_of_k(const NumTri& t, double k) {
  return bary_of_point(t, build_numeric_config(t, k).Q);
}

// -- Morley triangle and the trisector oracle -------------------------------

/// Adjacent-trisector intersections; equilateral by Morley's theorem.
inline std::array<Vec2, 3> morley_triangle(const NumTri& t) {
  auto trisector = [&](Vec2 V, Vec2 W, Vec2 other, double ang) {
    Vec2 u = (1.0 / norm(W - V)) * (W - V);
    const double sv = cross2(W - V, other - V) > 0 ? 1.0 : -1.0;
    return line_through(V, rotate(u, sv * ang / 3));
  };
  Vec2 PA = meet_lines(trisector(t.B, t.C, t.A, t.angB), trisector(t.C, t.B, t.A, t.angC), "PA");
  Vec2 PB = meet_lines(trisector(t.C, t.A, t.B, t.angC), trisector(t.A, t.C, t.B, t.angA), "PB");
  Vec2 PC = meet_lines(trisector(t.A, t.B, t.C, t.angA), trisector(t.B, t.A, t.C, t.angB), "PC");
  return {PA, PB, PC};
}

/// Perspector of the triangle and its Morley triangle, computed from the
/// trisector construction alone (independent oracle for r_of_k(1/3)).
inline NumBary second_morley_center(const NumTri& t) {
  auto [PA, PB, PC] = morley_triangle(t);
  auto join2 = [](Vec2 p, Vec2 q) { return line_through(p, q - p); };
  Vec2 p12 = meet_lines(join2(t.A, PA), join2(t.B, PB), "persp12");
  Vec2 p13 = meet_lines(join2(t.A, PA), join2(t.C, PC), "persp13");
  Vec2 p23 = meet_lines(join2(t.B, PB), join2(t.C, PC), "persp23");
  const double scale = norm(t.A - t.B) + norm(t.B - t.C) + norm(t.C - t.A);
  if (norm(p12 - p13) > 10 * kTolerance * scale || norm(p12 - p23) > 10 * kTolerance * scale)
    throw PerspectorNotFound();
  return bary_of_point(t, p12);
}

// -- curve sampling ---------------------------------------------------------

struct CurveSample {
  double k = 0;
  std::optional<NumBary> point;  // empty at a skipped pole
};

/// (k, R(k)) samples over a grid; poles are flagged, not extrapolated.
inline std::vector<CurveSample> sample_curve(const NumTri& t, const std::vector<double>& grid) {
  std::vector<CurveSample> out;
  out.reserve(grid.size());
  for (double k : grid) {
    CurveSample s;
    s.k = k;
    bool pole = false;
    if (std::abs(k) >= kLimitWindow && std::abs(1 - k) >= kLimitWindow)
      for (double a : t.angles())
        if (std::abs(std::sin(a * (1 - k))) < 1e-12) pole = true;
    if (!pole) s.point = r_of_k(t, k);
    out.push_back(s);
  }
  return out;
}

}  // namespace cevian::morley

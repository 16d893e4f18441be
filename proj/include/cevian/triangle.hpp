#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cevian/conic.hpp"
#include "cevian/errors.hpp"
#include "cevian/projective.hpp"
#include "cevian/rational.hpp"

namespace cevian {

/// Homogeneous barycentric coordinates relative to some Triangle,
/// stored canonically like ProjPoint. x + y + z = 0 is the line at
/// infinity.
class Bary {
 public:
  Bary(const Rat& x, const Rat& y, const Rat& z)
      : c_(detail::canonical_int_triple(canonical_triple(x, y, z))) {
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0) throw DegenerateInput("Bary: zero triple");
  }
  explicit Bary(std::array<Int, 3> t) : c_(detail::canonical_int_triple(std::move(t))) {
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0) throw DegenerateInput("Bary: zero triple");
  }

  const Int& x() const { return c_[0]; }
  const Int& y() const { return c_[1]; }
  const Int& z() const { return c_[2]; }
  const std::array<Int, 3>& triple() const { return c_; }

  std::string str() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
  }

 private:
  std::array<Int, 3> c_;
};

inline bool proj_equal(const Bary& a, const Bary& b) {
  return detail::proportional(a.triple(), b.triple());
}

/// Reference triangle with exact Cartesian vertices (chart z = 1) and
/// derived squared side lengths a2 = |BC|^2, b2 = |CA|^2, c2 = |AB|^2.
class Triangle {
 public:
  Triangle(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by, const Rat& cx,
           const Rat& cy)
      : A_(ax, ay), B_(bx, by), C_(cx, cy) {
    if (collinear(A_, B_, C_)) throw DegenerateInput("Triangle: collinear vertices");
    auto sq = [](const Rat& dx, const Rat& dy) -> Rat { return dx * dx + dy * dy; };
    // recover exact canonical coordinates from the stored points
    a2_ = sq(B_.cart_x() - C_.cart_x(), B_.cart_y() - C_.cart_y());
    b2_ = sq(C_.cart_x() - A_.cart_x(), C_.cart_y() - A_.cart_y());
    c2_ = sq(A_.cart_x() - B_.cart_x(), A_.cart_y() - B_.cart_y());
  }

  const ProjPoint& A() const { return A_; }
  const ProjPoint& B() const { return B_; }
  const ProjPoint& C() const { return C_; }
  const Rat& a2() const { return a2_; }
  const Rat& b2() const { return b2_; }
  const Rat& c2() const { return c2_; }

  ProjLine side_BC() const { return join(B_, C_); }
  ProjLine side_CA() const { return join(C_, A_); }
  ProjLine side_AB() const { return join(A_, B_); }

 private:
  ProjPoint A_, B_, C_;
  Rat a2_, b2_, c2_;
};

inline ProjPoint bary_to_proj(const Triangle& t, const Bary& b) {
  Rat x(b.x()), y(b.y()), z(b.z());
  return ProjPoint(x * t.A().cart_x() + y * t.B().cart_x() + z * t.C().cart_x(),
                   x * t.A().cart_y() + y * t.B().cart_y() + z * t.C().cart_y(), x + y + z);
}

inline Bary proj_to_bary(const Triangle& t, const ProjPoint& p) {
  // signed areas against each sideline, with the vertices dehomogenized
  // so the three determinants share one scale
  Rat px(p.x()), py(p.y()), pz(p.z());
  auto area = [&](const ProjPoint& q, const ProjPoint& r) -> Rat {
    Rat qx = q.cart_x(), qy = q.cart_y(), rx = r.cart_x(), ry = r.cart_y();
    return px * (qy - ry) - py * (qx - rx) + pz * (qx * ry - qy * rx);
  };
  return Bary(area(t.B(), t.C()), area(t.C(), t.A()), area(t.A(), t.B()));
}

/// Which sideline a trace lives on.
enum class Side { BC = 0, CA = 1, AB = 2 };

/// Trace (u, v) on a sideline: (0:u:v) on BC, (u:0:v) on CA, (u:v:0) on AB.
/// Both components nonzero (vertices excluded); negative ratios are fine.
struct Trace {
  Rat u, v;
  Trace(Rat uu, Rat vv) : u(std::move(uu)), v(std::move(vv)) {
    u.canonicalize();
    v.canonicalize();
    if (u == 0 || v == 0) throw TraceAtVertex();
  }
};

struct TraceSet {
  Trace tA, tB, tC;  // on BC, CA, AB
};

inline Bary trace_bary(Side s, const Trace& t) {
  switch (s) {
    case Side::BC: return Bary(Rat(0), t.u, t.v);
    case Side::CA: return Bary(t.u, Rat(0), t.v);
    default: return Bary(t.u, t.v, Rat(0));
  }
}

/// Reflection of the cevian across the bisector at the opposite vertex,
/// as a rational map on traces.
inline Trace isogonal_trace(const Triangle& tri, Side s, const Trace& t) {
  switch (s) {
    case Side::BC: return Trace(tri.b2() * t.v, tri.c2() * t.u);
    case Side::CA: return Trace(tri.a2() * t.v, tri.c2() * t.u);
    default: return Trace(tri.a2() * t.v, tri.b2() * t.u);
  }
}

/// Reflection of the trace in the side midpoint.
inline Trace isotomic_trace(const Trace& t) { return Trace(t.v, t.u); }

inline Bary isogonal_conjugate(const Triangle& tri, const Bary& b) {
  if (b.x() == 0 || b.y() == 0 || b.z() == 0) throw OnSideline();
  return Bary(tri.a2() * Rat(b.y() * b.z()), tri.b2() * Rat(b.x() * b.z()),
              tri.c2() * Rat(b.x() * b.y()));
}

inline Bary isotomic_conjugate(const Bary& b) {
  if (b.x() == 0 || b.y() == 0 || b.z() == 0) throw OnSideline();
  return Bary(std::array<Int, 3>{b.y() * b.z(), b.x() * b.z(), b.x() * b.y()});
}

enum class ModeKind { Isogonal, Isotomic, Free };

inline const char* mode_name(ModeKind m) {
  switch (m) {
    case ModeKind::Isogonal: return "isogonal";
    case ModeKind::Isotomic: return "isotomic";
    default: return "free";
  }
}

/// Free mode carries an explicit independent second trace set.
struct Mode {
  ModeKind kind;
  std::optional<TraceSet> second;

  static Mode isogonal() { return {ModeKind::Isogonal, std::nullopt}; }
  static Mode isotomic() { return {ModeKind::Isotomic, std::nullopt}; }
  static Mode free(TraceSet second_traces) { return {ModeKind::Free, std::move(second_traces)}; }
};

/// The fully derived cevian-hexagon object: six lines through the
/// vertices, hexagon points, side traces and the three centers.
struct Configuration {
  Triangle tri;
  ModeKind mode;
  ProjLine lA, lB, lC, lAp, lBp, lCp;
  ProjPoint X, Y, Z, Xp, Yp, Zp;
  ProjPoint A1, B1, C1, A1p, B1p, C1p;
  Bary tA, tB, tC, tAp, tBp, tCp;  // the same traces in barycentrics
  ProjPoint R, Rp, Q;

  std::array<ProjLine, 6> cevian_lines() const { return {lA, lAp, lB, lBp, lC, lCp}; }
  std::array<ProjPoint, 6> trace_points() const { return {A1, A1p, B1, B1p, C1, C1p}; }
  std::array<std::array<Int, 3>, 6> trace_barys() const {
    return {tA.triple(), tAp.triple(), tB.triple(), tBp.triple(), tC.triple(), tCp.triple()};
  }

  /// Stable hash of the canonical defining data (vertices + traces + mode).
  std::uint64_t fingerprint() const {
    std::uint64_t h = fnv1a(mode_name(mode));
    for (const ProjPoint* p : {&tri.A(), &tri.B(), &tri.C()}) h = fnv1a(p->str(), h);
    for (const Bary* b : {&tA, &tB, &tC, &tAp, &tBp, &tCp}) h = fnv1a(b->str(), h);
    return h;
  }
};

namespace detail {

inline ProjPoint cfg_meet(const ProjLine& l, const ProjLine& m, const char* what) {
  try {
    return meet(l, m);
  } catch (const CoincidentLines&) {
    throw DegenerateConfiguration(std::string("coincident lines at ") + what);
  }
}

inline ProjLine cfg_join(const ProjPoint& p, const ProjPoint& q, const char* what) {
  try {
    return join(p, q);
  } catch (const CoincidentPoints&) {
    throw DegenerateConfiguration(std::string("coincident points at ") + what);
  }
}

}  // namespace detail

inline Configuration build_configuration(const Triangle& tri, const TraceSet& traces,
                                         const Mode& mode) {
  TraceSet primed = [&]() -> TraceSet {
    switch (mode.kind) {
      case ModeKind::Isogonal:
        return {isogonal_trace(tri, Side::BC, traces.tA), isogonal_trace(tri, Side::CA, traces.tB),
                isogonal_trace(tri, Side::AB, traces.tC)};
      case ModeKind::Isotomic:
        return {isotomic_trace(traces.tA), isotomic_trace(traces.tB), isotomic_trace(traces.tC)};
      default:
        if (!mode.second) throw DegenerateConfiguration("Free mode without a second trace set");
        return *mode.second;
    }
  }();

  Bary tA = trace_bary(Side::BC, traces.tA), tB = trace_bary(Side::CA, traces.tB),
       tC = trace_bary(Side::AB, traces.tC);
  Bary tAp = trace_bary(Side::BC, primed.tA), tBp = trace_bary(Side::CA, primed.tB),
       tCp = trace_bary(Side::AB, primed.tC);

  ProjPoint A1 = bary_to_proj(tri, tA), B1 = bary_to_proj(tri, tB), C1 = bary_to_proj(tri, tC);
  ProjPoint A1p = bary_to_proj(tri, tAp), B1p = bary_to_proj(tri, tBp),
            C1p = bary_to_proj(tri, tCp);

  ProjLine lA = detail::cfg_join(tri.A(), A1, "lA"), lB = detail::cfg_join(tri.B(), B1, "lB"),
           lC = detail::cfg_join(tri.C(), C1, "lC");
  ProjLine lAp = detail::cfg_join(tri.A(), A1p, "lA'"), lBp = detail::cfg_join(tri.B(), B1p, "lB'"),
           lCp = detail::cfg_join(tri.C(), C1p, "lC'");

  // Hexagon pairing: X = lB ^ lC', Y = lC ^ lA', Z = lA ^ lB' and the
  // primed points with the roles swapped.
  ProjPoint X = detail::cfg_meet(lB, lCp, "X"), Y = detail::cfg_meet(lC, lAp, "Y"),
            Z = detail::cfg_meet(lA, lBp, "Z");
  ProjPoint Xp = detail::cfg_meet(lBp, lC, "X'"), Yp = detail::cfg_meet(lCp, lA, "Y'"),
            Zp = detail::cfg_meet(lAp, lB, "Z'");

  ProjLine AX = detail::cfg_join(tri.A(), X, "AX"), BY = detail::cfg_join(tri.B(), Y, "BY"),
           CZ = detail::cfg_join(tri.C(), Z, "CZ");
  ProjPoint R = detail::cfg_meet(AX, BY, "R");
  ProjLine AXp = detail::cfg_join(tri.A(), Xp, "AX'"), BYp = detail::cfg_join(tri.B(), Yp, "BY'"),
           CZp = detail::cfg_join(tri.C(), Zp, "CZ'");
  ProjPoint Rp = detail::cfg_meet(AXp, BYp, "R'");

  const bool conjugate_mode = mode.kind != ModeKind::Free;
  if (conjugate_mode) {
    if (!incident(R, CZ)) throw ConcurrencyViolation("R not on CZ");
    if (!incident(Rp, CZp)) throw ConcurrencyViolation("R' not on CZ'");
  }

  // Q = common point of XX', YY', ZZ' (and RR' in conjugate modes). Some
  // joins vanish in symmetric collapses; fall back to R when everything
  // coincides there.
  std::optional<ProjLine> joins[3];
  const ProjPoint* pairs[3][2] = {{&X, &Xp}, {&Y, &Yp}, {&Z, &Zp}};
  for (int i = 0; i < 3; ++i)
    if (!proj_equal(*pairs[i][0], *pairs[i][1])) joins[i] = join(*pairs[i][0], *pairs[i][1]);
  std::optional<ProjPoint> q;
  for (int i = 0; i < 3 && !q; ++i)
    for (int j = i + 1; j < 3 && !q; ++j)
      if (joins[i] && joins[j] && !proj_equal(*joins[i], *joins[j]))
        q = meet(*joins[i], *joins[j]);
  if (!q) {
    if (proj_equal(R, Rp))
      q = R;  // fully collapsed (e.g. medians on an equilateral triangle)
    else
      throw DegenerateConfiguration("Q undefined: hexagon diagonals collapse");
  }
  if (conjugate_mode) {
    for (const auto& jl : joins)
      if (jl && !incident(*q, *jl)) throw ConcurrencyViolation("Q off a hexagon diagonal");
    if (!proj_equal(R, Rp) && !collinear(*q, R, Rp))
      throw ConcurrencyViolation("Q off line RR'");
  }

  return Configuration{tri,  mode.kind, lA, lB, lC, lAp, lBp, lCp, X,   Y,   Z,  Xp,
                       Yp,   Zp,        A1, B1, C1, A1p, B1p, C1p, tA,  tB,  tC, tAp,
                       tBp,  tCp,       R,  Rp, *q};
}

/// Exact orthogonal projection of a finite point onto a finite line.
inline ProjPoint perpendicular_foot(const ProjPoint& p, const ProjLine& l) {
  if (!p.is_finite()) throw PointAtInfinity();
  Rat u(l.u()), v(l.v()), w(l.w());
  if (u == 0 && v == 0) throw DegenerateInput("perpendicular_foot: line at infinity");
  Rat px = p.cart_x(), py = p.cart_y();
  Rat t = (u * px + v * py + w) / (u * u + v * v);
  return ProjPoint(px - t * u, py - t * v);
}

/// Feet of the perpendiculars from the hexagon points onto the sides:
/// H_A from X onto BC, H_B from Y onto CA, H_C from Z onto AB, and the
/// primed feet from X', Y', Z'.
inline std::array<ProjPoint, 6> h_points(const Configuration& cfg) {
  for (const ProjPoint* p : {&cfg.X, &cfg.Y, &cfg.Z, &cfg.Xp, &cfg.Yp, &cfg.Zp})
    if (!p->is_finite()) throw HexagonPointAtInfinity();
  ProjLine a = cfg.tri.side_BC(), b = cfg.tri.side_CA(), c = cfg.tri.side_AB();
  return {perpendicular_foot(cfg.X, a),  perpendicular_foot(cfg.Y, b),
          perpendicular_foot(cfg.Z, c),  perpendicular_foot(cfg.Xp, a),
          perpendicular_foot(cfg.Yp, b), perpendicular_foot(cfg.Zp, c)};
}

/// Points introduced by the Lemma and Corollaries 1-2.
struct DerivedPoints {
  ProjPoint Ap, Bp, Cp;  // perspectrix points on the sidelines
  ProjPoint A2, B2, C2;  // cross-trace meets, each on a hexagon diagonal
  ProjPoint A3, B3, C3;  // Pascal-style meets, cevians through them concur
};

inline DerivedPoints derived_points(const Configuration& c) {
  using detail::cfg_join;
  using detail::cfg_meet;
  ProjPoint Cp = cfg_meet(cfg_join(c.X, c.Y, "XY"), cfg_join(c.Xp, c.Yp, "X'Y'"), "C'");
  ProjPoint Ap = cfg_meet(cfg_join(c.Y, c.Z, "YZ"), cfg_join(c.Yp, c.Zp, "Y'Z'"), "A'");
  ProjPoint Bp = cfg_meet(cfg_join(c.Z, c.X, "ZX"), cfg_join(c.Zp, c.Xp, "Z'X'"), "B'");
  ProjPoint A2 =
      cfg_meet(cfg_join(c.C1, c.B1, "C1B1"), cfg_join(c.C1p, c.B1p, "C1'B1'"), "A2");
  ProjPoint B2 =
      cfg_meet(cfg_join(c.A1, c.C1, "A1C1"), cfg_join(c.A1p, c.C1p, "A1'C1'"), "B2");
  ProjPoint C2 =
      cfg_meet(cfg_join(c.B1, c.A1, "B1A1"), cfg_join(c.B1p, c.A1p, "B1'A1'"), "C2");
  ProjPoint A3 =
      cfg_meet(cfg_join(c.A1, c.C1p, "A1C1'"), cfg_join(c.B1, c.A1p, "B1A1'"), "A3");
  ProjPoint B3 =
      cfg_meet(cfg_join(c.B1, c.A1p, "B1A1'"), cfg_join(c.C1, c.B1p, "C1B1'"), "B3");
  ProjPoint C3 =
      cfg_meet(cfg_join(c.C1, c.B1p, "C1B1'"), cfg_join(c.A1, c.C1p, "A1C1'"), "C3");
  return {Ap, Bp, Cp, A2, B2, C2, A3, B3, C3};
}

/// Carnot product of six side points given as projective points
/// (pairs on BC, CA, AB in that order).
inline Rat carnot_product(const Triangle& tri, const std::array<ProjPoint, 6>& traces) {
  std::array<std::array<Int, 3>, 6> b;
  for (int i = 0; i < 6; ++i) b[i] = proj_to_bary(tri, traces[i]).triple();
  return carnot_product(b);
}

}  // namespace cevian

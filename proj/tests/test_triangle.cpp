#include "doctest.h"

#include "cevian/triangle.hpp"

#include <random>

using namespace cevian;

namespace {

Triangle right_tri() { return Triangle(Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)); }

Triangle t345() { return Triangle(Rat(0), Rat(0), Rat(4), Rat(0), Rat(0), Rat(3)); }

Triangle equilateral_like() {
  // isosceles with b2 == c2; enough for the isogonal == isotomic collapse
  return Triangle(Rat(0), Rat(2), Rat(-1), Rat(0), Rat(1), Rat(0));
}

struct Rnd {
  std::mt19937_64 rng;
  std::uniform_int_distribution<long> d{-9, 9};
  explicit Rnd(unsigned s) : rng(s) {}
  Rat rat() {
    long n = d(rng);
    long q = 1 + std::abs(d(rng));
    Rat r(n, q);
    r.canonicalize();
    return r;
  }
  Rat nonzero() {
    for (;;) {
      Rat r = rat();
      if (r != 0) return r;
    }
  }
};

}  // namespace

TEST_CASE("bary <-> proj round trips and anchors") {
  auto tri = t345();
  CHECK(proj_equal(bary_to_proj(tri, Bary(Rat(1), Rat(0), Rat(0))), tri.A()));
  CHECK(proj_equal(bary_to_proj(tri, Bary(Rat(1), Rat(1), Rat(1))),
                   ProjPoint(Rat(4, 3), Rat(1))));
  CHECK(proj_equal(bary_to_proj(tri, Bary(Rat(0), Rat(1), Rat(1))), ProjPoint(Rat(2), Rat(3, 2))));
  Rnd r(5);
  for (int i = 0; i < 50; ++i) {
    Bary b(r.nonzero(), r.rat(), r.rat());
    if (Rat(b.x()) + Rat(b.y()) + Rat(b.z()) == 0) continue;  // point at infinity
    CHECK(proj_equal(proj_to_bary(tri, bary_to_proj(tri, b)), b));
  }
}

TEST_CASE("isogonal trace: median goes to symmedian, involution holds") {
  auto tri = t345();
  auto sym = isogonal_trace(tri, Side::BC, Trace(Rat(1), Rat(1)));
  CHECK(sym.u == tri.b2());
  CHECK(sym.v == tri.c2());
  Rnd r(6);
  for (auto side : {Side::BC, Side::CA, Side::AB}) {
    for (int i = 0; i < 20; ++i) {
      Trace t(r.nonzero(), r.nonzero());
      auto back = isogonal_trace(tri, side, isogonal_trace(tri, side, t));
      CHECK(t.u * back.v == t.v * back.u);
    }
  }
}

TEST_CASE("isotomic trace: midpoint fixed, swap, involution") {
  Trace mid(Rat(1), Rat(1));
  auto m2 = isotomic_trace(mid);
  CHECK(m2.u == 1);
  CHECK(m2.v == 1);
  auto s = isotomic_trace(Trace(Rat(1), Rat(2)));
  CHECK(s.u == 2);
  CHECK(s.v == 1);
}

TEST_CASE("isogonal and isotomic traces agree when b2 == c2") {
  auto tri = equilateral_like();
  REQUIRE(tri.b2() == tri.c2());
  Trace t(Rat(2), Rat(7));
  auto iso = isogonal_trace(tri, Side::BC, t);
  auto tom = isotomic_trace(t);
  CHECK(iso.u * tom.v == iso.v * tom.u);
}

TEST_CASE("conjugations: fixed points, symmedian point, involutions, sideline errors") {
  auto tri = t345();
  // symmedian point -> centroid
  CHECK(proj_equal(isogonal_conjugate(tri, Bary(tri.a2(), tri.b2(), tri.c2())),
                   Bary(Rat(1), Rat(1), Rat(1))));
  CHECK(proj_equal(isotomic_conjugate(Bary(Rat(1), Rat(2), Rat(3))), Bary(Rat(6), Rat(3), Rat(2))));
  CHECK(proj_equal(isotomic_conjugate(Bary(Rat(1), Rat(1), Rat(1))), Bary(Rat(1), Rat(1), Rat(1))));
  Rnd r(7);
  for (int i = 0; i < 20; ++i) {
    Bary b(r.nonzero(), r.nonzero(), r.nonzero());
    CHECK(proj_equal(isogonal_conjugate(tri, isogonal_conjugate(tri, b)), b));
    CHECK(proj_equal(isotomic_conjugate(isotomic_conjugate(b)), b));
  }
  CHECK_THROWS_AS(isogonal_conjugate(tri, Bary(Rat(0), Rat(1), Rat(1))), OnSideline);
  CHECK_THROWS_AS(isotomic_conjugate(Bary(Rat(0), Rat(1), Rat(1))), OnSideline);
}

TEST_CASE("build_configuration: exact concurrency in isogonal mode") {
  auto tri = right_tri();
  TraceSet traces{Trace(Rat(1), Rat(2)), Trace(Rat(1), Rat(2)), Trace(Rat(1), Rat(2))};
  auto cfg = build_configuration(tri, traces, Mode::isogonal());
  CHECK(concurrent(join(tri.A(), cfg.X), join(tri.B(), cfg.Y), join(tri.C(), cfg.Z)));
  // traces incident to both their cevian line and their sideline
  CHECK(incident(cfg.A1, cfg.lA));
  CHECK(incident(cfg.A1, tri.side_BC()));
  CHECK(incident(cfg.B1p, cfg.lBp));
  CHECK(incident(cfg.B1p, tri.side_CA()));
  // R' is the isogonal conjugate of R
  CHECK(proj_equal(proj_to_bary(tri, cfg.Rp),
                   isogonal_conjugate(tri, proj_to_bary(tri, cfg.R))));
}

TEST_CASE("build_configuration: isotomic mode conjugacy") {
  auto tri = t345();
  TraceSet traces{Trace(Rat(2), Rat(5)), Trace(Rat(-3), Rat(4)), Trace(Rat(1), Rat(3))};
  auto cfg = build_configuration(tri, traces, Mode::isotomic());
  CHECK(proj_equal(proj_to_bary(tri, cfg.Rp), isotomic_conjugate(proj_to_bary(tri, cfg.R))));
}

TEST_CASE("build_configuration: median symmetric collapse") {
  // isotomic mode with medians: all traces are fixed midpoints, everything
  // collapses onto the centroid
  auto tri = t345();
  TraceSet med{Trace(Rat(1), Rat(1)), Trace(Rat(1), Rat(1)), Trace(Rat(1), Rat(1))};
  auto cfg = build_configuration(tri, med, Mode::isotomic());
  auto centroid = bary_to_proj(tri, Bary(Rat(1), Rat(1), Rat(1)));
  for (const ProjPoint* p : {&cfg.X, &cfg.Y, &cfg.Z, &cfg.Xp, &cfg.Yp, &cfg.Zp, &cfg.R,
                             &cfg.Rp, &cfg.Q})
    CHECK(proj_equal(*p, centroid));
}

TEST_CASE("build_configuration: free mode generally breaks Theorem 1") {
  auto tri = right_tri();
  TraceSet first{Trace(Rat(1), Rat(2)), Trace(Rat(1), Rat(2)), Trace(Rat(1), Rat(2))};
  TraceSet second{Trace(Rat(3), Rat(1)), Trace(Rat(2), Rat(7)), Trace(Rat(5), Rat(3))};
  auto cfg = build_configuration(tri, first, Mode::free(second));
  CHECK_FALSE(concurrent(join(tri.A(), cfg.X), join(tri.B(), cfg.Y), join(tri.C(), cfg.Z)));
}

TEST_CASE("perpendicular_foot") {
  CHECK(proj_equal(perpendicular_foot(ProjPoint(Rat(1), Rat(1)), ProjLine(Rat(0), Rat(1), Rat(0))),
                   ProjPoint(Rat(1), Rat(0))));
  CHECK(proj_equal(perpendicular_foot(ProjPoint(Rat(0), Rat(0)), ProjLine(Rat(1), Rat(1), Rat(-1))),
                   ProjPoint(Rat(1, 2), Rat(1, 2))));
  // defining property on a random instance
  ProjPoint p(Rat(3, 7), Rat(-5, 2));
  ProjLine l(Rat(2), Rat(-9), Rat(4));
  auto f = perpendicular_foot(p, l);
  CHECK(incident(f, l));
  Rat dx = p.cart_x() - f.cart_x(), dy = p.cart_y() - f.cart_y();
  // direction of l is (-v, u)
  CHECK(dx * Rat(-l.v()) + dy * Rat(l.u()) == 0);
  CHECK_THROWS_AS(perpendicular_foot(ProjPoint(Rat(1), Rat(0), Rat(0)), l), PointAtInfinity);
}

TEST_CASE("h_points: concurrency of the foot cevians (Theorem 2 shape)") {
  auto tri = t345();
  TraceSet traces{Trace(Rat(1), Rat(3)), Trace(Rat(2), Rat(1)), Trace(Rat(4), Rat(5))};
  auto cfg = build_configuration(tri, traces, Mode::isogonal());
  auto feet = h_points(cfg);
  CHECK(concurrent(join(tri.A(), feet[0]), join(tri.B(), feet[1]), join(tri.C(), feet[2])));
  CHECK(conconic6({feet[0], feet[1], feet[2], feet[3], feet[4], feet[5]}));
}

TEST_CASE("derived_points: C' on AB, A2 on XX'") {
  auto tri = t345();
  TraceSet traces{Trace(Rat(2), Rat(3)), Trace(Rat(1), Rat(4)), Trace(Rat(3), Rat(2))};
  auto cfg = build_configuration(tri, traces, Mode::isogonal());
  auto dp = derived_points(cfg);
  CHECK(incident(dp.Cp, tri.side_AB()));
  CHECK(incident(dp.Ap, tri.side_BC()));
  CHECK(collinear(dp.A2, cfg.X, cfg.Xp));
  CHECK(collinear(dp.Ap, dp.Bp, dp.Cp));
}

TEST_CASE("trace at vertex is rejected") {
  CHECK_THROWS_AS(Trace(Rat(0), Rat(1)), TraceAtVertex);
}

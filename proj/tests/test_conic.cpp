#include "doctest.h"

#include "cevian/conic.hpp"
#include "cevian/triangle.hpp"

#include <random>

using namespace cevian;

namespace {

ProjPoint P(long x, long y, long z) { return ProjPoint(Rat(x), Rat(y), Rat(z)); }

/// Rational point on the unit circle at parameter t.
ProjPoint circle_point(const Rat& t) {
  return ProjPoint(1 - t * t, 2 * t, 1 + t * t);
}

/// Tangent line of the unit circle at the same parameter.
ProjLine circle_tangent(const Rat& t) {
  return ProjLine(1 - t * t, 2 * t, -(1 + t * t));
}

const Conic unit_circle{detail::Sym6{1, 1, -1, 0, 0, 0}};

}  // namespace

TEST_CASE("conic through five points: unit circle") {
  auto c = conic_through_points(
      {P(1, 0, 1), P(-1, 0, 1), P(0, 1, 1), P(0, -1, 1), P(3, 4, 5)});
  CHECK(c.sym() == detail::Sym6{1, 1, -1, 0, 0, 0});
  for (const auto& p : {P(1, 0, 1), P(-1, 0, 1), P(0, 1, 1), P(0, -1, 1), P(3, 4, 5)})
    CHECK(c.residual(p) == 0);
}

TEST_CASE("conic through triangle, centroid, near-incenter has zero residuals") {
  // five generic points: vertices of a scalene triangle plus two interior points
  auto c = conic_through_points(
      {P(0, 0, 1), P(7, 0, 1), P(2, 5, 1), P(3, 1, 1), P(2, 2, 1)});
  for (const auto& p : {P(0, 0, 1), P(7, 0, 1), P(2, 5, 1), P(3, 1, 1), P(2, 2, 1)})
    CHECK(c.residual(p) == 0);
}

TEST_CASE("five points with four collinear are degenerate") {
  CHECK_THROWS_AS(conic_through_points(
                      {P(0, 0, 1), P(1, 0, 1), P(2, 0, 1), P(3, 0, 1), P(1, 1, 1)}),
                  DegenerateInput);
}

TEST_CASE("conic tangent to five lines: dual unit circle") {
  auto d = conic_tangent_to_lines({circle_tangent(Rat(0)), circle_tangent(Rat(1)),
                                   circle_tangent(Rat(-1)), circle_tangent(Rat(2)),
                                   circle_tangent(Rat(1, 2))});
  CHECK(d.sym() == dual_conic(unit_circle).sym());
  CHECK(is_tangent(circle_tangent(Rat(3)), d));
}

TEST_CASE("four concurrent lines among five are degenerate") {
  // four lines through (0:0:1)
  CHECK_THROWS_AS(
      conic_tangent_to_lines({ProjLine(Rat(1), Rat(0), Rat(0)), ProjLine(Rat(0), Rat(1), Rat(0)),
                              ProjLine(Rat(1), Rat(1), Rat(0)), ProjLine(Rat(1), Rat(-1), Rat(0)),
                              ProjLine(Rat(1), Rat(1), Rat(1))}),
      DegenerateInput);
}

TEST_CASE("tangency and membership predicates") {
  auto d = dual_conic(unit_circle);
  CHECK(is_tangent(ProjLine(Rat(1), Rat(0), Rat(-1)), d));
  CHECK_FALSE(is_tangent(ProjLine(Rat(1), Rat(0), Rat(0)), d));
  CHECK(on_conic(P(1, 0, 1), unit_circle));
  CHECK_FALSE(on_conic(P(0, 0, 1), unit_circle));
}

TEST_CASE("dual conic round trip and adjugate values") {
  CHECK(proj_equal(ProjPoint(std::array<Int, 3>{1, 1, -1}),
                   ProjPoint(std::array<Int, 3>{dual_conic(unit_circle).sym()[0],
                                                dual_conic(unit_circle).sym()[1],
                                                dual_conic(unit_circle).sym()[2]})));
  Conic c(detail::Sym6{1, 2, -1, 0, 0, 0});
  auto d = dual_conic(c);
  CHECK(d.sym() == detail::Sym6{2, 1, -2, 0, 0, 0});
  CHECK(primal_conic(d).sym() == c.sym());
  Conic rank2(detail::Sym6{1, -1, 0, 0, 0, 0});  // pair of lines x^2 = y^2
  CHECK_THROWS_AS(dual_conic(rank2), DegenerateConic);
}

TEST_CASE("conconic6 on circle points, with perturbation, and line-degenerate") {
  std::array<ProjPoint, 6> pts = {circle_point(Rat(0)),    circle_point(Rat(1)),
                                  circle_point(Rat(-1)),   circle_point(Rat(2)),
                                  circle_point(Rat(1, 2)), circle_point(Rat(3))};
  CHECK(conconic6(pts));
  auto bumped = pts;
  const auto& t = pts[5].triple();
  bumped[5] = ProjPoint(Rat(t[0]) + Rat(1, 1000), Rat(t[1]), Rat(t[2]));
  CHECK_FALSE(conconic6(bumped));
  // five collinear points: a degenerate conic (line pair) always exists
  std::array<ProjPoint, 6> coll = {P(0, 0, 1), P(1, 0, 1), P(2, 0, 1),
                                   P(3, 0, 1), P(4, 0, 1), P(1, 5, 1)};
  CHECK(conconic6(coll));
}

TEST_CASE("conconic6 invariant under permutation and rescaling") {
  std::array<ProjPoint, 6> pts = {circle_point(Rat(0)),     circle_point(Rat(1)),
                                  circle_point(Rat(-2)),    circle_point(Rat(1, 3)),
                                  circle_point(Rat(5)),     P(17, 3, 4)};
  Rat d0 = conconic6_det(pts);
  std::array<ProjPoint, 6> perm = {pts[3], pts[0], pts[5], pts[1], pts[4], pts[2]};
  CHECK((d0 == 0) == (conconic6_det(perm) == 0));
  CHECK(d0 != 0);
}

TEST_CASE("appending a sixth point: conconic6 iff on_conic of the five-point conic") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> d(-9, 9);
  int done = 0;
  while (done < 50) {
    Rat t0(d(rng), 7);
    t0.canonicalize();
    std::array<ProjPoint, 5> five = {circle_point(t0), circle_point(Rat(d(rng) + 20)),
                                     P(d(rng), d(rng), 1 + std::abs(d(rng))),
                                     P(d(rng), d(rng), 1), P(d(rng), d(rng), 2)};
    ProjPoint extra(Rat(d(rng)), Rat(d(rng)), Rat(1));
    try {
      auto c = conic_through_points(five);
      std::array<ProjPoint, 6> six = {five[0], five[1], five[2], five[3], five[4], extra};
      CHECK(conconic6(six) == on_conic(extra, c));
      ++done;
    } catch (const DegenerateInput&) {
      continue;
    }
  }
}

TEST_CASE("carnot product: doubled midpoints, and a doubled ratio") {
  std::array<std::array<Int, 3>, 6> mid = {{{0, 1, 1}, {0, 1, 1}, {1, 0, 1},
                                            {1, 0, 1}, {1, 1, 0}, {1, 1, 0}}};
  CHECK(carnot_product(mid) == 1);
  auto bump = mid;
  bump[0] = {0, 1, 2};  // ratio doubled on BC
  CHECK(carnot_product(bump) == 2);
  auto at_vertex = mid;
  at_vertex[2] = {1, 0, 0};
  CHECK_THROWS_AS(carnot_product(at_vertex), TraceAtVertex);
}

TEST_CASE("carnot product = 1 iff conconic, randomized") {
  // random trace sets on the standard triangle A=(1:0:0), B=(0:1:0), C=(0:0:1);
  // in barycentric coordinates Veronese conconicity applies verbatim.
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> d(1, 12);
  std::uniform_int_distribution<int> sign(0, 1);
  Triangle ref(Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1));
  int agree = 0, checked = 0, conconic_count = 0;
  while (checked < 1000) {
    std::array<std::array<Int, 3>, 6> tr;
    for (int i = 0; i < 6; ++i) {
      Int u = d(rng) * (sign(rng) ? 1 : -1), v = d(rng);
      int side = i / 2;
      tr[i] = side == 0 ? std::array<Int, 3>{0, u, v}
              : side == 1 ? std::array<Int, 3>{u, 0, v}
                          : std::array<Int, 3>{u, v, 0};
    }
    std::array<ProjPoint, 6> pts = {
        bary_to_proj(ref, Bary(tr[0])), bary_to_proj(ref, Bary(tr[1])),
        bary_to_proj(ref, Bary(tr[2])), bary_to_proj(ref, Bary(tr[3])),
        bary_to_proj(ref, Bary(tr[4])), bary_to_proj(ref, Bary(tr[5]))};
    // general position: six distinct points and no sideline-plus-line
    // degenerate conic (those make the Veronese determinant vanish without
    // the ratio criterion)
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = i + 1; j < 6 && ok; ++j) ok = !proj_equal(pts[i], pts[j]);
    for (int side = 0; side < 3 && ok; ++side) {
      int o1 = (side + 1) % 3, o2 = (side + 2) % 3;
      ok = !(collinear(pts[2 * o1], pts[2 * o1 + 1], pts[2 * o2]) &&
             collinear(pts[2 * o1], pts[2 * o1 + 1], pts[2 * o2 + 1]));
    }
    if (!ok) continue;
    bool cc = conconic6(pts);
    if (cc) ++conconic_count;
    if (cc == (carnot_product(tr) == 1)) ++agree;
    ++checked;
  }
  CHECK(agree == 1000);
}

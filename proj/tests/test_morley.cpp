#include "doctest.h"

#include "cevian/morley.hpp"

using namespace cevian;
using namespace cevian::morley;

namespace {

NumTri scalene() { return NumTri({0, 0}, {7, 0}, {2, 4}); }

NumTri obtuse() { return NumTri({0, 0}, {10, 0}, {8.5, 1.5}); }

NumTri flipped() { return NumTri({0, 0}, {2, 4}, {7, 0}); }  // negative orientation

}  // namespace

TEST_CASE("R(1/2) is the incenter") {
  for (const auto& t : {scalene(), obtuse(), flipped()})
    CHECK(bary_distance(r_of_k(t, 0.5), incenter(t)) < kTolerance);
}

TEST_CASE("R(-1) is the orthocenter, and its conjugate the circumcenter") {
  for (const auto& t : {scalene(), obtuse()}) {
    CHECK(bary_distance(r_of_k(t, -1), orthocenter(t)) < kTolerance);
    CHECK(bary_distance(isogonal_conjugate(t, r_of_k(t, -1)), circumcenter(t)) < kTolerance);
  }
}

TEST_CASE("R(1/3) is the perspector of the Morley triangle") {
  for (const auto& t : {scalene(), obtuse(), flipped()})
    CHECK(bary_distance(r_of_k(t, 1.0 / 3), second_morley_center(t)) < kTolerance);
}

TEST_CASE("D(1/2) is the Gergonne point and D(1) the orthocenter") {
  for (const auto& t : {scalene(), obtuse()}) {
    CHECK(bary_distance(d_of_k(t, 0.5), gergonne_point(t)) < kTolerance);
    CHECK(bary_distance(d_of_k(t, 1), orthocenter(t)) < kTolerance);
  }
}

TEST_CASE("D(k) pole: right angle at k = 1") {
  NumTri right({0, 0}, {3, 0}, {0, 4});
  CHECK_THROWS_AS(d_of_k(right, 1), TangentPole);
}

TEST_CASE("self-isogonality: R(1-k) is the conjugate of R(k)") {
  auto t = scalene();
  for (double k : {0.1, 0.25, 0.4, 0.7, 0.9})
    CHECK(bary_distance(r_of_k(t, 1 - k), isogonal_conjugate(t, r_of_k(t, k))) < kTolerance);
}

TEST_CASE("limits are continuous at the endpoints") {
  // the deviation is O(k) with a slope that grows with angle spread, so the
  // 1e-4 budget is checked on moderately scalene triangles
  for (const auto& t : {scalene(), NumTri({0, 0}, {1, 0}, {0.52, 0.85})}) {
    CHECK(bary_distance(r_of_k(t, 0.001), r_zero(t)) < 1e-4);
    CHECK(bary_distance(r_of_k(t, 0.999), r_one(t)) < 1e-4);
    CHECK(bary_distance(d_of_k(t, 0.001), r_zero(t)) < 1e-4);
  }
  // the slope itself stays bounded on the flat triangle as well
  auto t = obtuse();
  CHECK(bary_distance(r_of_k(t, 0.001), r_zero(t)) < 1e-3);
  CHECK(bary_distance(r_of_k(t, 0.0001), r_zero(t)) < 1e-4);
}

TEST_CASE("constructive configuration agrees with the closed form") {
  for (const auto& t : {scalene(), obtuse(), flipped()})
    for (double k : {0.15, 1.0 / 3, 0.45, 0.6}) {
      auto c = build_numeric_config(t, k);
      CHECK(bary_distance(bary_of_point(t, c.R), r_of_k(t, k)) < 1e-8);
      CHECK(bary_distance(bary_of_point(t, c.Rp),
                          isogonal_conjugate(t, r_of_k(t, k))) < 1e-8);
    }
}

TEST_CASE("k = 1/2 collapses the hexagon onto the incenter") {
  auto t = scalene();
  auto c = build_numeric_config(t, 0.5);
  const auto inc = incenter(t);
  for (Vec2 p : {c.X, c.Y, c.Z, c.Xp, c.Yp, c.Zp, c.R, c.Rp, c.Q})
    CHECK(bary_distance(bary_of_point(t, p), inc) < 1e-8);
}

TEST_CASE("q_of_k stays on the limit branch near the collapse") {
  auto t = scalene();
  CHECK_NOTHROW(q_of_k(t, 0.5));
  CHECK_NOTHROW(q_of_k(t, 0.49));
}

TEST_CASE("build_numeric_config rejects k outside (-1,1) and k = 0") {
  auto t = scalene();
  CHECK_THROWS_AS(build_numeric_config(t, 0), DegenerateInput);
  CHECK_THROWS_AS(build_numeric_config(t, 1), DegenerateInput);
  CHECK_THROWS_AS(build_numeric_config(t, -1.5), DegenerateInput);
}

TEST_CASE("Morley triangle is equilateral") {
  for (const auto& t : {scalene(), obtuse(), flipped()}) {
    auto [pa, pb, pc] = morley_triangle(t);
    const double ab = norm(pa - pb), bc = norm(pb - pc), ca = norm(pc - pa);
    CHECK(std::abs(ab - bc) < 1e-10 * ab);
    CHECK(std::abs(bc - ca) < 1e-10 * ab);
  }
}

TEST_CASE("sample_curve flags poles and fills regular points") {
  NumTri eq({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  auto samples = sample_curve(eq, {-2.0, 0.25, 0.5});
  REQUIRE(samples.size() == 3);
  CHECK_FALSE(samples[0].point.has_value());  // sin(A*(1-k)) = sin(pi) = 0
  CHECK(samples[1].point.has_value());
  CHECK(samples[2].point.has_value());
  CHECK(bary_distance(*samples[2].point, incenter(eq)) < kTolerance);
}

TEST_CASE("degenerate triangle is rejected") {
  CHECK_THROWS_AS(NumTri({0, 0}, {1, 0}, {2, 0}), DegenerateInput);
}

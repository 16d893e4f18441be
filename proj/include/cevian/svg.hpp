#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cevian/conic.hpp"
#include "cevian/triangle.hpp"

namespace cevian {

namespace detail {

struct Pt2 {
  double x = 0, y = 0;
};

inline double rat_to_double(const Rat& r) { return r.get_d(); }

/// Double image of a canonical integer 6-tuple, scaled by its largest entry
/// so huge exact coefficients stay in range.
inline std::array<double, 6> sym6_to_double(const Sym6& m) {
  Int mx(1);
  for (const auto& v : m)
    if (abs(v) > mx) mx = abs(v);
  std::array<double, 6> out{};
  for (int i = 0; i < 6; ++i) {
    Rat r(m[i], mx);
    r.canonicalize();
    out[i] = r.get_d();
  }
  return out;
}

/// Samples a central conic by diagonalizing its quadratic part. Returns one
/// closed polyline for an ellipse, two open branches for a hyperbola, and
/// nothing when the curve is empty or degenerate.
inline std::vector<std::vector<Pt2>> sample_conic(const Sym6& sym, int n) {
  const auto m = sym6_to_double(sym);
  const double m00 = m[0], m11 = m[1], m22 = m[2], m01 = m[3], m02 = m[4], m12 = m[5];
  const double det2 = m00 * m11 - m01 * m01;
  if (std::abs(det2) < 1e-14) return {};
  const double cx = (-m02 * m11 + m12 * m01) / det2;
  const double cy = (-m00 * m12 + m01 * m02) / det2;
  const double f = m02 * cx + m12 * cy + m22;
  if (std::abs(f) < 1e-14) return {};
  const double phi = 0.5 * std::atan2(2 * m01, m00 - m11);
  const double c = std::cos(phi), s = std::sin(phi);
  const double l1 = m00 * c * c + 2 * m01 * c * s + m11 * s * s;
  const double l2 = m00 * s * s - 2 * m01 * c * s + m11 * c * c;
  const double r1 = -f / l1, r2 = -f / l2;
  auto emit = [&](double u, double v) {
    return Pt2{cx + c * u - s * v, cy + s * u + c * v};
  };
  std::vector<std::vector<Pt2>> out;
  if (r1 > 0 && r2 > 0) {
    const double a = std::sqrt(r1), b = std::sqrt(r2);
    std::vector<Pt2> ring;
    ring.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      const double th = 2 * M_PI * i / n;
      ring.push_back(emit(a * std::cos(th), b * std::sin(th)));
    }
    out.push_back(std::move(ring));
  } else if (r1 * r2 < 0) {
    const bool u_real = r1 > 0;
    const double a = std::sqrt(u_real ? r1 : r2), b = std::sqrt(u_real ? -r2 : -r1);
    for (int sign : {1, -1}) {
      std::vector<Pt2> branch;
      branch.reserve(n + 1);
      for (int i = 0; i <= n; ++i) {
        const double t = -2.5 + 5.0 * i / n;
        const double uu = sign * a * std::cosh(t), vv = b * std::sinh(t);
        branch.push_back(u_real ? emit(uu, vv) : emit(vv, uu));
      }
      out.push_back(std::move(branch));
    }
  }
  return out;
}

inline std::string fmt2(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f,%.4f", x, y);
  return buf;
}

inline std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace detail

/// The conic inscribed in the six cevian lines. When the lines collapse in
/// pairs (the median configuration) the conic is rebuilt from its contact
/// points on the sidelines instead.
inline Conic inscribed_conic(const Configuration& cfg) {
  const auto ls = cfg.cevian_lines();
  try {
    return primal_conic(conic_tangent_to_lines({ls[0], ls[1], ls[2], ls[3], ls[4]}));
  } catch (const DegenerateInput&) {
  } catch (const DegenerateConic&) {
  }
  // tangency at a known contact point p on line l: cross(M p, l) = 0
  std::vector<std::array<Rat, 6>> rows;
  const std::array<ProjLine, 3> sides = {cfg.tri.side_BC(), cfg.tri.side_CA(),
                                         cfg.tri.side_AB()};
  const std::array<ProjPoint, 3> contacts = {cfg.A1, cfg.B1, cfg.C1};
  for (int i = 0; i < 3; ++i) {
    const auto& p = contacts[i].triple();
    const auto& l = sides[i].triple();
    // coefficient rows of (M p)_0, (M p)_1, (M p)_2 over (m00,m11,m22,m01,m02,m12)
    const std::array<std::array<Int, 6>, 3> mp = {{{p[0], 0, 0, p[1], p[2], 0},
                                                   {0, p[1], 0, p[0], 0, p[2]},
                                                   {0, 0, p[2], 0, p[0], p[1]}}};
    for (int k = 0; k < 3; ++k) {
      const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
      std::array<Rat, 6> row;
      for (int c = 0; c < 6; ++c) row[c] = Rat(l[i2] * mp[i1][c] - l[i1] * mp[i2][c]);
      rows.push_back(row);
    }
  }
  return Conic(detail::nullspace_5x6(std::move(rows)));
}

/// The conic through the six traces, falling back to the inscribed conic
/// when primed and unprimed traces coincide (contact points lie on it).
inline Conic trace_circumconic(const Configuration& cfg) {
  try {
    return conic_through_points({cfg.A1, cfg.B1, cfg.C1, cfg.A1p, cfg.B1p});
  } catch (const DegenerateInput&) {
    Conic ins = inscribed_conic(cfg);
    for (const auto& p : cfg.trace_points())
      if (ins.residual(p) != 0) throw;
    return ins;
  }
}

/// SVG 1.1 rendering of a configuration: triangle, the six cevian lines,
/// labeled hexagon points with R, R', Q, the inscribed conic, and the
/// circumconic of the traces. Pure formatting, deterministic per input.
inline std::string render_figure(const Configuration& cfg, int conic_samples = 256) {
  using detail::Pt2;
  const double W = 800, H = 600, margin = 48;

  struct Labeled {
    const char* name;
    const ProjPoint* p;
  };
  const std::array<Labeled, 9> marks = {{{"X", &cfg.X},
                                         {"Y", &cfg.Y},
                                         {"Z", &cfg.Z},
                                         {"X'", &cfg.Xp},
                                         {"Y'", &cfg.Yp},
                                         {"Z'", &cfg.Zp},
                                         {"R", &cfg.R},
                                         {"R'", &cfg.Rp},
                                         {"Q", &cfg.Q}}};

  std::vector<Pt2> anchors;
  auto push_finite = [&](const ProjPoint& p) {
    if (p.z() == 0) return;
    anchors.push_back({detail::rat_to_double(p.cart_x()), detail::rat_to_double(p.cart_y())});
  };
  push_finite(cfg.tri.A());
  push_finite(cfg.tri.B());
  push_finite(cfg.tri.C());
  for (const auto& m : marks) push_finite(*m.p);
  for (const auto& t : cfg.trace_points()) push_finite(t);

  double minx = anchors[0].x, maxx = anchors[0].x, miny = anchors[0].y, maxy = anchors[0].y;
  for (const auto& a : anchors) {
    minx = std::min(minx, a.x);
    maxx = std::max(maxx, a.x);
    miny = std::min(miny, a.y);
    maxy = std::max(maxy, a.y);
  }
  const double bw = std::max(maxx - minx, 1e-9), bh = std::max(maxy - miny, 1e-9);
  const double pad = 0.15 * std::max(bw, bh);
  minx -= pad;
  maxx += pad;
  miny -= pad;
  maxy += pad;
  const double scale = std::min((W - 2 * margin) / (maxx - minx), (H - 2 * margin) / (maxy - miny));
  auto map = [&](Pt2 p) {
    return Pt2{margin + (p.x - minx) * scale, H - margin - (p.y - miny) * scale};
  };
  auto world = [&](const ProjPoint& p) {
    return Pt2{detail::rat_to_double(p.cart_x()), detail::rat_to_double(p.cart_y())};
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n";

  // triangle
  {
    Pt2 a = map(world(cfg.tri.A())), b = map(world(cfg.tri.B())), c = map(world(cfg.tri.C()));
    out += "  <polygon class=\"triangle\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
           "points=\"" +
           detail::fmt2(a.x, a.y) + " " + detail::fmt2(b.x, b.y) + " " + detail::fmt2(c.x, c.y) +
           "\"/>\n";
  }

  // cevian lines, clipped to the world box
  for (const auto& l : cfg.cevian_lines()) {
    const auto& t = l.triple();
    Int mx(1);
    for (const auto& v : t)
      if (abs(v) > mx) mx = abs(v);
    auto coef = [&](const Int& v) {
      Rat r(v, mx);
      r.canonicalize();
      return r.get_d();
    };
    const double a = coef(t[0]), b = coef(t[1]), c = coef(t[2]);
    std::vector<Pt2> hits;
    auto consider = [&](double x, double y) {
      if (x >= minx - 1e-9 && x <= maxx + 1e-9 && y >= miny - 1e-9 && y <= maxy + 1e-9)
        hits.push_back({x, y});
    };
    if (std::abs(b) > 1e-15) {
      consider(minx, -(a * minx + c) / b);
      consider(maxx, -(a * maxx + c) / b);
    }
    if (std::abs(a) > 1e-15) {
      consider(-(b * miny + c) / a, miny);
      consider(-(b * maxy + c) / a, maxy);
    }
    if (hits.size() < 2) continue;
    auto far = [&] {
      double best = -1;
      std::pair<Pt2, Pt2> seg{hits[0], hits[0]};
      for (size_t i = 0; i < hits.size(); ++i)
        for (size_t j = i + 1; j < hits.size(); ++j) {
          const double d = std::hypot(hits[i].x - hits[j].x, hits[i].y - hits[j].y);
          if (d > best) {
            best = d;
            seg = {hits[i], hits[j]};
          }
        }
      return seg;
    }();
    Pt2 p = map(far.first), q = map(far.second);
    out += "  <line class=\"cevian\" stroke=\"#666666\" stroke-width=\"0.8\" x1=\"" +
           detail::fmt1(p.x) + "\" y1=\"" + detail::fmt1(p.y) + "\" x2=\"" + detail::fmt1(q.x) +
           "\" y2=\"" + detail::fmt1(q.y) + "\"/>\n";
  }

  // conics as sampled polylines
  auto draw_conic = [&](const Conic& c, const char* cls, const char* color) {
    for (const auto& path : detail::sample_conic(c.sym(), conic_samples)) {
      out += "  <polyline class=\"";
      out += cls;
      out += "\" fill=\"none\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"1\" points=\"";
      bool first = true;
      for (const auto& p : path) {
        Pt2 q = map(p);
        if (!first) out += " ";
        out += detail::fmt2(q.x, q.y);
        first = false;
      }
      out += "\"/>\n";
    }
  };
  draw_conic(inscribed_conic(cfg), "inscribed-conic", "#0066cc");
  draw_conic(trace_circumconic(cfg), "circumconic", "#cc3300");

  // labeled points
  auto label = [&](const char* name, Pt2 w) {
    Pt2 p = map(w);
    out += "  <circle class=\"point\" r=\"3\" fill=\"black\" cx=\"" + detail::fmt1(p.x) +
           "\" cy=\"" + detail::fmt1(p.y) + "\"/>\n";
    out += "  <text font-size=\"13\" font-family=\"sans-serif\" x=\"" + detail::fmt1(p.x + 5) +
           "\" y=\"" + detail::fmt1(p.y - 5) + "\">";
    out += name;
    out += "</text>\n";
  };
  label("A", world(cfg.tri.A()));
  label("B", world(cfg.tri.B()));
  label("C", world(cfg.tri.C()));
  for (const auto& m : marks)
    if (m.p->z() != 0) label(m.name, world(*m.p));

  out += "</svg>\n";
  return out;
}

}  // namespace cevian

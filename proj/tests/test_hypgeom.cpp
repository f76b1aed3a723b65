#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace coxsys;
using namespace coxsys::hyp;

namespace {

// Point at hyperbolic distance t forward of p along the oriented geodesic.
Pt advance(const Geodesic& g, const Pt& p, int fwd, double t) {
  if (g.vertical) return {g.a, p.y * std::exp(fwd > 0 ? t : -t)};
  double phi = std::atan2(p.y, p.x - g.center());
  // arclength along the semicircle: s = ln tan(phi/2), increasing with phi
  double s = std::log(std::tan(phi / 2));
  double s2 = s + (fwd > 0 ? t : -t);
  double phi2 = 2 * std::atan(std::exp(s2));
  return {g.center() + g.radius() * std::cos(phi2), g.radius() * std::sin(phi2)};
}

}  // namespace

TEST_CASE("half-plane distances") {
  CHECK(dist({0, 1}, {0, 2}) == Catch::Approx(std::log(2.0)).margin(1e-12));
  CHECK(dist({0, 1}, {0, 1}) == 0.0);
  SECTION("crossing lines have distance zero") {
    Geodesic unit = Geodesic::circle(-1, 1);
    Geodesic axis = Geodesic::vertical_line(0);
    CHECK(line_distance(unit, axis) == 0.0);
    auto p = intersect(unit, axis);
    REQUIRE(p.has_value());
    CHECK(p->x == Catch::Approx(0.0).margin(1e-12));
    CHECK(p->y == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("disjoint lines: common perpendicular length") {
    Geodesic g1 = Geodesic::circle(-1, 1);
    Geodesic g2 = Geodesic::circle(2, 4);
    double d = line_distance(g1, g2);
    CHECK(d > 0);
    // the common perpendicular realizes the infimum over point pairs
    double best = 1e9;
    for (double a = 0.05; a < std::numbers::pi; a += 0.01)
      for (double b = 0.05; b < std::numbers::pi; b += 0.01) {
        Pt p{std::cos(a), std::sin(a)};
        Pt q{3 + std::cos(b), std::sin(b)};
        best = std::min(best, dist(p, q));
      }
    CHECK(best == Catch::Approx(d).margin(1e-3));
  }
  SECTION("degenerate endpoints are rejected") {
    CHECK_THROWS_MATCHES(Geodesic::circle(1, 1), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Errc::DegenerateGeodesic;
                         }));
  }
}

TEST_CASE("distance symmetry and triangle inequality") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.1, 4);
  for (int t = 0; t < 1000; ++t) {
    Pt a{ux(rng), uy(rng)}, b{ux(rng), uy(rng)}, c{ux(rng), uy(rng)};
    CHECK(std::abs(dist(a, b) - dist(b, a)) < 1e-10);
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-10);
  }
}

TEST_CASE("right-angled regular hexagon") {
  HexagonModel h = build_hexagon();
  double L = std::acosh(2.0);

  CHECK(std::abs(h.side_length - L) < 1e-9);
  for (double a : h.angles) CHECK(std::abs(a - std::numbers::pi / 2) < 1e-9);

  SECTION("cosh L solves x^2 - x - 2 = 0 at x = 2") {
    double x = std::cosh(h.side_length);
    CHECK(std::abs(x * x - x - 2) < 1e-8);
  }

  SECTION("all six side lengths agree") {
    for (int j = 0; j < 6; ++j) {
      double len = dist(h.vertices[static_cast<size_t>((j + 5) % 6)],
                        h.vertices[static_cast<size_t>(j)]);
      CHECK(std::abs(len - L) < 1e-9);
    }
  }

  SECTION("reflection relations within 1e-9") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ux(-0.4, 0.4), uy(0.7, 1.4);
    for (int j = 0; j < 6; ++j) {
      const Isometry& s = h.refl[static_cast<size_t>(j)];
      const Isometry& snext = h.refl[static_cast<size_t>((j + 1) % 6)];
      Isometry ss = s * s;
      Isometry comm = (s * snext) * (s * snext);
      for (int t = 0; t < 20; ++t) {
        Pt p{ux(rng), uy(rng)};
        CHECK(dist(ss(p), p) < 1e-9);
        CHECK(dist(comm(p), p) < 1e-9);
      }
    }
  }

  SECTION("s_{i-1} s_{i+1} translates Delta_i by 2L") {
    for (int i = 0; i < 6; ++i) {
      Isometry tr = h.refl[static_cast<size_t>((i + 5) % 6)] * h.refl[static_cast<size_t>((i + 1) % 6)];
      CHECK(std::abs(tr.translation_length() - 2 * L) < 1e-8);
      // the axis is Delta_i: its endpoints are preserved
      Geodesic img = tr(h.sides[static_cast<size_t>(i)]);
      CHECK(std::abs(img.a - h.sides[static_cast<size_t>(i)].a) < 1e-8);
      CHECK(std::abs(img.b - h.sides[static_cast<size_t>(i)].b) < 1e-8);
    }
  }
}

TEST_CASE("arc tracing") {
  HexagonModel h = build_hexagon();
  double L = std::acosh(2.0);

  SECTION("perpendicular ray through the middle of a side starts with that index") {
    for (int j = 0; j < 6; ++j) {
      // the geodesic from the center i through the apothem foot of side j
      Isometry rot = Isometry::rotation_about_i(j * std::numbers::pi / 3.0);
      Pt foot = rot(Pt{0, std::exp(h.apothem)});
      Pt center{0, 1};
      Geodesic ray = through(center, foot);
      double tx, ty;
      if (ray.vertical) {
        tx = 0;
        ty = foot.y > center.y ? 1 : -1;
      } else {
        tx = center.y;
        ty = -(center.x - ray.center());
        double n = std::hypot(tx, ty);
        tx /= n;
        ty /= n;
        if (tx * (foot.x - center.x) + ty * (foot.y - center.y) < 0) {
          tx = -tx;
          ty = -ty;
        }
      }
      ArcTrace tr = trace_arc(h, center, std::atan2(ty, tx), 3);
      REQUIRE_FALSE(tr.rejected);
      REQUIRE(tr.crossings.size() >= 1);
      CHECK(tr.crossings[0].index == j);
      CHECK(std::abs(tr.crossings[0].t - h.apothem) < 1e-9);
    }
  }

  SECTION("a segment crossing one tile between opposite sides is longer than L") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.7, 1.5), ut(0, 2 * std::numbers::pi);
    int checked = 0;
    while (checked < 200) {
      Pt p{ux(rng), uy(rng)};
      if (!h.inside(p)) continue;
      ArcTrace tr = trace_arc(h, p, ut(rng), 8);
      if (tr.rejected || tr.crossings.size() < 3) continue;
      for (size_t n = 0; n + 2 < tr.crossings.size(); ++n)
        CHECK(tr.crossings[n + 2].t - tr.crossings[n].t > L);
      checked++;
    }
  }

  SECTION("unfolding consistency: pushed-forward endpoint lies on the ambient ray") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.7, 1.5), ut(0, 2 * std::numbers::pi);
    int checked = 0;
    while (checked < 100) {
      Pt p{ux(rng), uy(rng)};
      if (!h.inside(p)) continue;
      double theta = ut(rng);
      ArcTrace tr = trace_arc(h, p, theta, 8);
      if (tr.rejected || tr.crossings.size() < 8) continue;
      // ambient ray data
      Geodesic g0 = through_direction(p, theta);
      double u0 = std::atan2(p.y, g0.vertical ? 0.0 : p.x - g0.center());
      int fwd;
      {
        Pt ahead = g0.vertical ? Pt{g0.a, p.y * 1.0001}
                               : Pt{g0.center() + g0.radius() * std::cos(u0 + 1e-4),
                                    g0.radius() * std::sin(u0 + 1e-4)};
        double dx = ahead.x - p.x, dy = ahead.y - p.y;
        fwd = (dx * std::cos(theta) + dy * std::sin(theta) >= 0) ? 1 : -1;
      }
      Isometry w = Isometry::identity();
      size_t upto = 8;
      for (size_t n = 0; n < upto; ++n) {
        const Crossing& c = tr.crossings[n];
        Pt ambient = advance(g0, p, fwd, c.t);
        Pt pushed = w(c.point);
        if (c.at_vertex && n + 1 < upto && tr.crossings[n + 1].t == c.t) {
          // vertex pair: both letters share the crossing point
          CHECK(dist(ambient, pushed) < 1e-9);
          w = w * h.refl[static_cast<size_t>(c.index)];
          continue;
        }
        CHECK(dist(ambient, pushed) < 1e-9);
        w = w * h.refl[static_cast<size_t>(c.index)];
      }
      checked++;
    }
  }
}

TEST_CASE("length experiments: small deterministic run") {
  HexagonModel h = build_hexagon();
  LengthExperimentReport rep = length_experiments(h, 300, 4, 20260810);
  CHECK(rep.counterexamples_a == 0);
  CHECK(rep.counterexamples_b == 0);
  CHECK(rep.windows_b > 0);
  CHECK(rep.min_margin_a > 0);
  CHECK(rep.min_margin_b > 0);
}

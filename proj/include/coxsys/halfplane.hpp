#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "coxsys/common.hpp"

namespace coxsys::hyp {

struct Pt {
  double x = 0, y = 1;  // y > 0
};

inline double dist(const Pt& p, const Pt& q) {
  double dx = p.x - q.x, dy = p.y - q.y;
  double c = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
  return std::acosh(std::max(1.0, c));
}

// Geodesic of the half-plane: a vertical line x = a, or the semicircle with
// real boundary endpoints a < b (center (a+b)/2, radius (b-a)/2).
struct Geodesic {
  bool vertical = false;
  double a = 0, b = 0;  // endpoints; vertical lines use a only

  static Geodesic vertical_line(double x) { return {true, x, 0}; }
  static Geodesic circle(double u, double v) {
    require(u != v, Errc::DegenerateGeodesic, "geodesic endpoints coincide");
    return {false, std::min(u, v), std::max(u, v)};
  }
  double center() const { return (a + b) / 2; }
  double radius() const { return (b - a) / 2; }

  bool contains(const Pt& p, double tol = 1e-9) const {
    if (vertical) return std::abs(p.x - a) <= tol;
    double dx = p.x - center();
    return std::abs(std::sqrt(dx * dx + p.y * p.y) - radius()) <= tol;
  }
};

// Geodesic through two distinct points.
inline Geodesic through(const Pt& p, const Pt& q) {
  if (std::abs(p.x - q.x) < 1e-14) return Geodesic::vertical_line((p.x + q.x) / 2);
  // center c on the real axis with |p-c| = |q-c|
  double c = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
  double r = std::hypot(p.x - c, p.y);
  return Geodesic::circle(c - r, c + r);
}

// Geodesic through p with unit tangent direction theta (Euclidean angle).
inline Geodesic through_direction(const Pt& p, double theta) {
  double dx = std::cos(theta), dy = std::sin(theta);
  if (std::abs(dx) < 1e-14) return Geodesic::vertical_line(p.x);
  // tangent (dx,dy) at p on circle centered (c,0): (p-c) . t = 0
  double c = p.x + p.y * dy / dx;
  double r = std::hypot(p.x - c, p.y);
  return Geodesic::circle(c - r, c + r);
}

inline std::optional<Pt> intersect(const Geodesic& g1, const Geodesic& g2) {
  if (g1.vertical && g2.vertical) return std::nullopt;
  if (g1.vertical || g2.vertical) {
    const Geodesic& v = g1.vertical ? g1 : g2;
    const Geodesic& c = g1.vertical ? g2 : g1;
    double dx = v.a - c.center();
    double y2 = c.radius() * c.radius() - dx * dx;
    if (y2 <= 0) return std::nullopt;
    return Pt{v.a, std::sqrt(y2)};
  }
  double c1 = g1.center(), r1 = g1.radius(), c2 = g2.center(), r2 = g2.radius();
  if (c1 == c2) return std::nullopt;
  double x = (c2 * c2 - c1 * c1 + r1 * r1 - r2 * r2) / (2.0 * (c2 - c1));
  double y2 = r1 * r1 - (x - c1) * (x - c1);
  if (y2 <= 0) return std::nullopt;
  return Pt{x, std::sqrt(y2)};
}

// Inversive product: |.| < 1 crossing, = 1 tangent/asymptotic, > 1 disjoint
// with cosh(distance) = |.|.
inline double inversive_product(const Geodesic& g1, const Geodesic& g2) {
  if (g1.vertical && g2.vertical) return 1.0;
  if (g1.vertical || g2.vertical) {
    const Geodesic& v = g1.vertical ? g1 : g2;
    const Geodesic& c = g1.vertical ? g2 : g1;
    return std::abs(v.a - c.center()) / c.radius();
  }
  double d = g1.center() - g2.center();
  return std::abs(d * d - g1.radius() * g1.radius() - g2.radius() * g2.radius()) /
         (2.0 * g1.radius() * g2.radius());
}

// Distance between two geodesics: 0 when they cross (or are asymptotic),
// else the length of the common perpendicular.
inline double line_distance(const Geodesic& g1, const Geodesic& g2) {
  double i = inversive_product(g1, g2);
  if (i <= 1.0) return 0.0;
  return std::acosh(i);
}

// Angle in (0, pi/2] between two crossing geodesics at their intersection.
inline double crossing_angle(const Geodesic& g1, const Geodesic& g2) {
  auto p = intersect(g1, g2);
  require(p.has_value(), Errc::DegenerateGeodesic, "geodesics do not cross");
  auto tangent = [&](const Geodesic& g) {
    if (g.vertical) return std::pair<double, double>{0.0, 1.0};
    double dx = p->x - g.center();
    double n = std::hypot(dx, p->y);
    return std::pair<double, double>{p->y / n, -dx / n};
  };
  auto [t1x, t1y] = tangent(g1);
  auto [t2x, t2y] = tangent(g2);
  double c = std::abs(t1x * t2x + t1y * t2y);
  return std::acos(std::min(1.0, c));
}

// Isometry of the half-plane: a real Moebius matrix, acting on z or on
// conj(z) when orientation-reversing. Real matrices compose by plain
// multiplication with the reversal flags xored.
struct Isometry {
  double m[2][2] = {{1, 0}, {0, 1}};
  bool rev = false;

  static Isometry identity() { return {}; }

  static Isometry reflection(const Geodesic& g) {
    Isometry s;
    s.rev = true;
    if (g.vertical) {
      // z -> 2a - conj z
      s.m[0][0] = -1;
      s.m[0][1] = 2 * g.a;
      s.m[1][0] = 0;
      s.m[1][1] = 1;
    } else {
      // z -> (c conj z + r^2 - c^2) / (conj z - c)
      double c = g.center(), r = g.radius();
      s.m[0][0] = c / r;
      s.m[0][1] = (r * r - c * c) / r;
      s.m[1][0] = 1 / r;
      s.m[1][1] = -c / r;
    }
    return s;
  }

  // Rotation by phi about the point i.
  static Isometry rotation_about_i(double phi) {
    Isometry r;
    r.m[0][0] = std::cos(phi / 2);
    r.m[0][1] = std::sin(phi / 2);
    r.m[1][0] = -std::sin(phi / 2);
    r.m[1][1] = std::cos(phi / 2);
    return r;
  }

  Isometry operator*(const Isometry& o) const {
    Isometry r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    r.rev = rev != o.rev;
    return r;
  }

  Pt operator()(const Pt& p) const {
    double x = p.x, y = rev ? -p.y : p.y;
    // (a z + b) / (c z + d) with z = x + iy, y sign already flipped
    double a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    double den = (c * x + d) * (c * x + d) + c * c * y * y;
    double rx = ((a * x + b) * (c * x + d) + a * c * y * y) / den;
    double ry = (a * d - b * c) * y / den;
    return {rx, ry};
  }

  // Boundary action (reversal acts trivially on the real line).
  double boundary(double x) const {
    double den = m[1][0] * x + m[1][1];
    if (std::abs(den) < 1e-300) return std::numeric_limits<double>::infinity();
    return (m[0][0] * x + m[0][1]) / den;
  }

  Geodesic operator()(const Geodesic& g) const {
    double e1, e2;
    if (g.vertical) {
      e1 = boundary(g.a);
      e2 = std::abs(m[1][0]) < 1e-14 ? std::numeric_limits<double>::infinity()
                                     : m[0][0] / m[1][0];
    } else {
      e1 = boundary(g.a);
      e2 = boundary(g.b);
    }
    if (std::isinf(e1)) return Geodesic::vertical_line(e2);
    if (std::isinf(e2)) return Geodesic::vertical_line(e1);
    return Geodesic::circle(e1, e2);
  }

  // Translation length along the axis for a hyperbolic element; requires a
  // det-normalized orientation-preserving matrix.
  double translation_length() const {
    require(!rev, Errc::Usage, "translation length of a reflection");
    double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double s = std::sqrt(std::abs(det));
    double tr = std::abs((m[0][0] + m[1][1]) / s);
    require(tr >= 2.0, Errc::Usage, "element is not hyperbolic");
    return 2.0 * std::acosh(tr / 2.0);
  }
};

}  // namespace coxsys::hyp

#pragma once

#include <array>

#include "coxsys/halfplane.hpp"

namespace coxsys::hyp {

// The regular right-angled hexagon centered at i, sides indexed by Z/6Z in
// the anti-clockwise direction, together with the six side reflections
// generating W(infinity). Side j is the rotate-by-j*pi/3 image of the
// semicircle |z| = e^a; the apothem a is found by bisection on the interior
// angle between adjacent sides, which decreases from 2pi/3 (small a) to 0.
struct HexagonModel {
  std::array<Geodesic, 6> sides;
  std::array<Isometry, 6> refl;
  std::array<Pt, 6> vertices;   // vertices[j] = sides[j] ^ sides[j+1]
  std::array<double, 6> angles; // interior angle at vertices[j]
  double apothem = 0;
  double side_length = 0;

  bool inside(const Pt& p) const {
    for (int j = 0; j < 6; ++j) {
      const Geodesic& g = sides[static_cast<size_t>(j)];
      double dx = p.x - g.center();
      if (dx * dx + p.y * p.y >= g.radius() * g.radius()) return false;
    }
    return true;
  }
};

namespace detail {

// Unit tangent of a semicircle geodesic at p, directed toward the chord to q.
inline std::pair<double, double> tangent_towards(const Geodesic& g, const Pt& p, const Pt& q) {
  double tx = p.y, ty = -(p.x - g.center());
  double n = std::hypot(tx, ty);
  tx /= n;
  ty /= n;
  if (tx * (q.x - p.x) + ty * (q.y - p.y) < 0) {
    tx = -tx;
    ty = -ty;
  }
  return {tx, ty};
}

// Interior angle at the vertex between sides 0 and 1 of the hexagon with
// apothem a; +infinity when the sides no longer meet is mapped to 0.
inline double interior_angle(double a) {
  Geodesic s0 = Geodesic::circle(-std::exp(a), std::exp(a));
  Isometry rot = Isometry::rotation_about_i(std::numbers::pi / 3.0);
  Geodesic s1 = rot(s0);
  auto v = intersect(s0, s1);
  if (!v) return 0.0;
  Pt f0{0, std::exp(a)};
  Pt f1 = rot(f0);
  auto [u0x, u0y] = tangent_towards(s0, *v, f0);
  auto [u1x, u1y] = tangent_towards(s1, *v, f1);
  double c = u0x * u1x + u0y * u1y;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace detail

inline HexagonModel build_hexagon(double tol = 1e-12) {
  double lo = 0.05, hi = 2.0;
  require(detail::interior_angle(lo) > std::numbers::pi / 2, Errc::ConvergenceFailed,
          "lower bracket invalid");
  require(detail::interior_angle(hi) < std::numbers::pi / 2, Errc::ConvergenceFailed,
          "upper bracket invalid");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = (lo + hi) / 2;
    if (detail::interior_angle(mid) > std::numbers::pi / 2)
      lo = mid;
    else
      hi = mid;
  }
  require(hi - lo <= tol * 2, Errc::ConvergenceFailed, "apothem bisection did not converge");

  HexagonModel h;
  h.apothem = (lo + hi) / 2;
  Geodesic base = Geodesic::circle(-std::exp(h.apothem), std::exp(h.apothem));
  for (int j = 0; j < 6; ++j) {
    Isometry r = Isometry::rotation_about_i(j * std::numbers::pi / 3.0);
    h.sides[static_cast<size_t>(j)] = r(base);
  }
  for (int j = 0; j < 6; ++j) {
    h.refl[static_cast<size_t>(j)] = Isometry::reflection(h.sides[static_cast<size_t>(j)]);
    auto v = intersect(h.sides[static_cast<size_t>(j)], h.sides[static_cast<size_t>((j + 1) % 6)]);
    require(v.has_value(), Errc::ConvergenceFailed, "adjacent sides do not meet");
    h.vertices[static_cast<size_t>(j)] = *v;
  }
  for (int j = 0; j < 6; ++j)
    h.angles[static_cast<size_t>(j)] = crossing_angle(h.sides[static_cast<size_t>(j)],
                                                      h.sides[static_cast<size_t>((j + 1) % 6)]);
  h.side_length = dist(h.vertices[5], h.vertices[0]);
  return h;
}

}  // namespace coxsys::hyp

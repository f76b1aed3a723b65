#pragma once

#include <random>

#include "coxsys/hexagon.hpp"
#include "coxsys/words.hpp"

namespace coxsys::hyp {

// One curve crossing along a traced ray: the side index (0-based), the
// cumulative arc length at the crossing, and the crossing point in the
// pulled-back (standard tile) coordinates.
struct Crossing {
  int index;
  double t;
  Pt point;
  bool at_vertex;
};

struct ArcTrace {
  std::vector<Crossing> crossings;
  bool rejected = false;  // near-tangent or ambiguous-vertex configuration
};

namespace detail {

struct RayState {
  Geodesic g;
  Pt p;
  int fwd;  // +1: increasing circle angle (or increasing y); -1: the opposite
};

inline double ray_param(const Geodesic& g, const Pt& p) {
  if (g.vertical) return std::log(p.y);
  return std::atan2(p.y, p.x - g.center());
}

inline Pt ray_point(const Geodesic& g, double param) {
  if (g.vertical) return {g.a, std::exp(param)};
  return {g.center() + g.radius() * std::cos(param), g.radius() * std::sin(param)};
}

// Picks the forward orientation at p whose small offset lands inside the
// hexagon; returns 0 when ambiguous.
inline int orientation_into(const HexagonModel& h, const Geodesic& g, const Pt& p) {
  for (double delta : {1e-7, 1e-9, 1e-5}) {
    double u = ray_param(g, p);
    bool plus = h.inside(ray_point(g, u + delta));
    bool minus = h.inside(ray_point(g, u - delta));
    if (plus != minus) return plus ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

// Traces the geodesic ray from `start` (strictly inside the distinguished
// tile) in direction `theta`, unfolding the tesselation by reflecting the
// standard hexagon across each crossed side, and emits the indices of the
// crossed curves in order. A ray passing within vertex_tol of a vertex
// crosses both curves there, index i first and then i+1; passes inside the
// ambiguity band above vertex_tol reject the trace, as do near-tangent
// crossings.
inline ArcTrace trace_arc(const HexagonModel& h, Pt start, double theta, int max_crossings,
                          double vertex_tol = 1e-9, double reject_band = 1e-6,
                          double angle_tol = 1e-6) {
  require(h.inside(start), Errc::Usage, "ray must start inside the distinguished tile");
  ArcTrace out;
  detail::RayState ray;
  ray.g = through_direction(start, theta);
  ray.p = start;
  {
    double u = detail::ray_param(ray.g, ray.p);
    Pt ahead = detail::ray_point(ray.g, u + 1e-7);
    double dx = ahead.x - start.x, dy = ahead.y - start.y;
    ray.fwd = (dx * std::cos(theta) + dy * std::sin(theta) >= 0) ? 1 : -1;
  }
  double total = 0;
  while (static_cast<int>(out.crossings.size()) < max_crossings) {
    double u0 = detail::ray_param(ray.g, ray.p);
    int exit_side = -1;
    double best_u = 0;
    Pt exit_pt;
    for (int j = 0; j < 6; ++j) {
      auto q = intersect(ray.g, h.sides[static_cast<size_t>(j)]);
      if (!q) continue;
      double uq = detail::ray_param(ray.g, *q);
      double advance = ray.fwd * (uq - u0);
      if (advance <= 1e-12) continue;
      if (exit_side < 0 || advance < best_u) {
        exit_side = j;
        best_u = advance;
        exit_pt = *q;
      }
    }
    if (exit_side < 0) {
      out.rejected = true;  // ray runs along a curve or numeric degeneracy
      return out;
    }
    if (crossing_angle(ray.g, h.sides[static_cast<size_t>(exit_side)]) < angle_tol) {
      out.rejected = true;
      return out;
    }
    total += dist(ray.p, exit_pt);
    // vertex handling: the two endpoints of side j meet sides j-1 and j+1
    double d_prev = dist(exit_pt, h.vertices[static_cast<size_t>((exit_side + 5) % 6)]);
    double d_next = dist(exit_pt, h.vertices[static_cast<size_t>(exit_side)]);
    double dv = std::min(d_prev, d_next);
    if (dv < reject_band && dv >= vertex_tol) {
      out.rejected = true;
      return out;
    }
    std::vector<int> emitted;
    if (dv < vertex_tol) {
      // corner between sides a and a+1, crossed index a first
      int a = d_prev < d_next ? (exit_side + 5) % 6 : exit_side;
      emitted = {a, (a + 1) % 6};
    } else {
      emitted = {exit_side};
    }
    for (size_t e = 0; e < emitted.size(); ++e) {
      out.crossings.push_back({emitted[e], total, exit_pt, emitted.size() == 2});
      if (static_cast<int>(out.crossings.size()) >= max_crossings) break;
    }
    // pull the ray back across each emitted side
    Geodesic g2 = ray.g;
    for (int j : emitted) g2 = h.refl[static_cast<size_t>(j)](g2);
    ray.g = g2;
    ray.p = exit_pt;  // fixed by the emitted reflections
    int fwd = detail::orientation_into(h, ray.g, ray.p);
    if (fwd == 0) {
      out.rejected = true;
      return out;
    }
    ray.fwd = fwd;
  }
  return out;
}

inline Word crossing_word(const ArcTrace& a) {
  Word w;
  for (const auto& c : a.crossings) w.push_back(c.index);
  return w;
}

// Red sides are S1, S3, S5 (0-based indices 0, 2, 4).
inline bool is_red_side(int index) { return index % 2 == 0; }

struct LengthExperimentReport {
  int k = 0;
  long trials = 0;
  long rejected = 0;
  long counterexamples_a = 0;  // combinatorial-length-2 subarcs of length <= L
  long counterexamples_b = 0;  // 2k-red windows of length <= 2kL
  long windows_b = 0;
  double min_margin_a = std::numeric_limits<double>::infinity();
  double min_margin_b = std::numeric_limits<double>::infinity();
  struct Reproduction {
    double x, y, theta;
    uint64_t trial_seed;
  };
  std::vector<Reproduction> failures;
};

// Monte-Carlo support for the two length lemmas: (a) every arc between
// crossings n and n+2 is longer than L; (b) every window spanning 2k
// complete red-to-red segments is longer than 2kL. Rays are sampled with a
// uniform interior start and direction; rejected configurations are
// resampled (the tested conditions are open, so rejection does not bias).
inline LengthExperimentReport length_experiments(const HexagonModel& h, long trials, int k,
                                                 uint64_t seed) {
  require(trials >= 1, Errc::Usage, "trials must be >= 1");
  require(k >= 2, Errc::Usage, "k must be >= 2");
  LengthExperimentReport rep;
  rep.k = k;
  rep.trials = trials;
  const double L = h.side_length;
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (const auto& v : h.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const int need_reds = 2 * k + 2;
  const int max_crossings = 8 * k + 40;
  for (long trial = 0; trial < trials; ++trial) {
    uint64_t trial_seed = seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(trial);
    std::mt19937_64 rng(trial_seed);
    std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax),
        utheta(0, 2 * std::numbers::pi);
    ArcTrace tr;
    Pt p;
    double theta = 0;
    bool ok = false;
    for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
      p = {ux(rng), uy(rng)};
      if (!h.inside(p)) continue;
      theta = utheta(rng);
      tr = trace_arc(h, p, theta, max_crossings);
      if (tr.rejected) {
        rep.rejected++;
        continue;
      }
      int reds = 0;
      for (const auto& c : tr.crossings) reds += is_red_side(c.index);
      if (reds < need_reds) continue;  // window short of reds; resample
      ok = true;
    }
    require(ok, Errc::ConvergenceFailed, "could not sample an admissible arc");

    const auto& cs = tr.crossings;
    bool failed = false;
    for (size_t n = 0; n + 2 < cs.size(); ++n) {
      double len = cs[n + 2].t - cs[n].t;
      rep.min_margin_a = std::min(rep.min_margin_a, len - L);
      if (len <= L) {
        rep.counterexamples_a++;
        failed = true;
      }
    }
    std::vector<size_t> reds;
    for (size_t n = 0; n < cs.size(); ++n)
      if (is_red_side(cs[n].index)) reds.push_back(n);
    for (size_t j = 0; j + static_cast<size_t>(2 * k) < reds.size(); ++j) {
      double len = cs[reds[j + static_cast<size_t>(2 * k)]].t - cs[reds[j]].t;
      rep.windows_b++;
      rep.min_margin_b = std::min(rep.min_margin_b, len - 2 * k * L);
      if (len <= 2 * k * L) {
        rep.counterexamples_b++;
        failed = true;
      }
    }
    if (failed) rep.failures.push_back({p.x, p.y, theta, trial_seed});
  }
  return rep;
}

}  // namespace coxsys::hyp

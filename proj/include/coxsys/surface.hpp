#pragma once

#include <fstream>
#include <map>

#include "coxsys/quotient_datum.hpp"

#include "json.hpp"

namespace coxsys {

// A tessellated surface built from a quotient datum: tiles are the group
// elements, tile q borders q*sigma_i along its index-i side, vertices are
// the 4-element cosets q<sigma_i, sigma_{i+1}>, and the index-i curves are
// traced by alternating sigma_{i+1} / sigma_{i-1} on the anchor tile.
struct TessellatedSurface {
  int k = 0;
  long long f0 = 0, f1 = 0, f2 = 0;
  long long genus = 0;

  std::vector<int> tile_sign;  // +1 for P, -1 for the mirrored decoration

  struct Edge {
    int a, b;   // tile ids, a < b
    int index;  // side index, 0-based
    bool operator==(const Edge& o) const { return a == o.a && b == o.b && index == o.index; }
  };
  std::vector<Edge> edges;

  struct Curve {
    int index;
    std::vector<int> sides;  // edge ids, in traced order
    bool operator==(const Curve& o) const { return index == o.index && sides == o.sides; }
  };
  std::vector<Curve> curves;

  bool operator==(const TessellatedSurface& o) const {
    return k == o.k && f0 == o.f0 && f1 == o.f1 && f2 == o.f2 && genus == o.genus &&
           tile_sign == o.tile_sign && edges == o.edges && curves == o.curves;
  }
};

// Result of build_surface: either an explicit surface or, above the tile
// cap, the counting data that needs no explicit complex.
struct SurfaceBuildResult {
  bool counts_only = false;
  std::optional<TessellatedSurface> surface;
  Int f2 = 0, f1 = 0, f0 = 0, genus = 0, curve_count = 0;
};

namespace detail {

template <class Action>
SurfaceBuildResult build_surface_impl(
    const Action& a, const std::vector<typename Action::Elt>& gens, int k,
    const std::function<int(const typename Action::Elt&)>& sign_of, size_t tile_cap,
    const std::function<Int()>& order_fallback) {
  using Elt = typename Action::Elt;
  validate_datum(a, gens, k, sign_of);
  check_gates(a, gens, k);

  // Closure enumeration of the tiles, BFS order.
  std::vector<Elt> tiles{a.identity()};
  std::unordered_map<std::string, int> id_of;
  id_of.emplace(a.key(tiles[0]), 0);
  bool capped = false;
  for (size_t i = 0; i < tiles.size() && !capped; ++i) {
    for (int g = 0; g < 6; ++g) {
      Elt n = a.compose(tiles[i], gens[static_cast<size_t>(g)]);
      std::string key = a.key(n);
      if (id_of.count(key)) continue;
      if (tiles.size() >= tile_cap) {
        capped = true;
        break;
      }
      id_of.emplace(std::move(key), static_cast<int>(tiles.size()));
      tiles.push_back(std::move(n));
    }
  }

  SurfaceBuildResult res;
  if (capped) {
    // Counts-only mode: f2 = |Q| from the stabilizer chain; the gate checks
    // above already establish 2k-regularity.
    res.counts_only = true;
    res.f2 = order_fallback();
    res.f1 = 3 * res.f2;
    res.f0 = res.f1 / 2;
    require(res.f2 % 4 == 0, Errc::Nonorientable, "f2 must be divisible by 4");
    res.genus = 1 + res.f2 / 4;
    require((3 * res.f2) % (2 * k) == 0, Errc::EarlyCurveClosure,
            "side count not divisible by the curve length");
    res.curve_count = 3 * res.f2 / (2 * k);
    return res;
  }

  TessellatedSurface s;
  s.k = k;
  s.f2 = static_cast<long long>(tiles.size());
  require(s.f2 % 4 == 0, Errc::Nonorientable,
          "f2 = " + std::to_string(s.f2) + " is not divisible by 4");

  // neighbor table and decoration signs
  std::vector<std::array<int, 6>> nbr(tiles.size());
  for (size_t q = 0; q < tiles.size(); ++q)
    for (int g = 0; g < 6; ++g)
      nbr[q][static_cast<size_t>(g)] =
          id_of.at(a.key(a.compose(tiles[q], gens[static_cast<size_t>(g)])));
  s.tile_sign.resize(tiles.size());
  for (size_t q = 0; q < tiles.size(); ++q) s.tile_sign[q] = sign_of(tiles[q]);

  // edges, scan order deterministic
  std::map<std::tuple<int, int, int>, int> edge_id;
  for (int q = 0; q < static_cast<int>(tiles.size()); ++q)
    for (int i = 0; i < 6; ++i) {
      int n = nbr[static_cast<size_t>(q)][static_cast<size_t>(i)];
      require(n != q, Errc::Condition11_1Violated, "a tile borders itself");
      int lo = std::min(q, n), hi = std::max(q, n);
      auto key = std::make_tuple(lo, hi, i);
      if (!edge_id.count(key)) {
        edge_id.emplace(key, static_cast<int>(s.edges.size()));
        s.edges.push_back({lo, hi, i});
      }
      require(s.tile_sign[static_cast<size_t>(q)] != s.tile_sign[static_cast<size_t>(n)],
              Errc::Nonorientable, "adjacent tiles carry equal decoration signs");
    }
  s.f1 = static_cast<long long>(s.edges.size());
  require(s.f1 == 3 * s.f2, Errc::Internal, "f1 != 3 f2");

  // vertices: cosets q<sigma_i, sigma_{i+1}>; count distinct, each of size 4
  std::set<std::pair<int, int>> vertices;
  for (int q = 0; q < static_cast<int>(tiles.size()); ++q)
    for (int i = 0; i < 6; ++i) {
      int j = (i + 1) % 6;
      std::array<int, 4> coset = {
          q, nbr[static_cast<size_t>(q)][static_cast<size_t>(i)],
          nbr[static_cast<size_t>(q)][static_cast<size_t>(j)],
          nbr[static_cast<size_t>(nbr[static_cast<size_t>(q)][static_cast<size_t>(i)])]
             [static_cast<size_t>(j)]};
      std::sort(coset.begin(), coset.end());
      require(coset[0] < coset[1] && coset[1] < coset[2] && coset[2] < coset[3],
              Errc::Condition11_1Violated, "corner coset has fewer than 4 tiles");
      vertices.emplace(coset[0], i);
    }
  s.f0 = static_cast<long long>(vertices.size());
  require(s.f0 == s.f1 / 2, Errc::Internal, "f0 != f1/2");

  long long euler = s.f0 - s.f1 + s.f2;
  require((2 - euler) % 2 == 0, Errc::Internal, "odd Euler characteristic");
  s.genus = (2 - euler) / 2;
  require(s.genus == 1 + s.f2 / 4, Errc::Internal, "genus does not match 1 + f2/4");

  // curves: trace each index class, seeds in edge-id order
  std::vector<char> visited(s.edges.size(), 0);
  for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
    if (visited[static_cast<size_t>(e)]) continue;
    int i = s.edges[static_cast<size_t>(e)].index;
    TessellatedSurface::Curve curve;
    curve.index = i;
    int anchor = s.edges[static_cast<size_t>(e)].a;
    int ip = (i + 1) % 6, im = (i + 5) % 6;
    for (int step = 0; step < 2 * k; ++step) {
      int other = nbr[static_cast<size_t>(anchor)][static_cast<size_t>(i)];
      auto key = std::make_tuple(std::min(anchor, other), std::max(anchor, other), i);
      int eid = edge_id.at(key);
      require(!visited[static_cast<size_t>(eid)], Errc::EarlyCurveClosure,
              "curve revisits a side before closing");
      visited[static_cast<size_t>(eid)] = 1;
      curve.sides.push_back(eid);
      anchor = nbr[static_cast<size_t>(anchor)][static_cast<size_t>(step % 2 == 0 ? ip : im)];
    }
    // closure after exactly 2k sides
    int other = nbr[static_cast<size_t>(anchor)][static_cast<size_t>(i)];
    auto key = std::make_tuple(std::min(anchor, other), std::max(anchor, other), i);
    require(edge_id.at(key) == e, Errc::EarlyCurveClosure,
            "curve did not close after exactly 2k sides");
    s.curves.push_back(std::move(curve));
  }
  require(s.curves.size() * static_cast<size_t>(2 * k) == s.edges.size(), Errc::Internal,
          "curves do not cover the sides exactly once");

  res.surface = std::move(s);
  res.f2 = res.surface->f2;
  res.f1 = res.surface->f1;
  res.f0 = res.surface->f0;
  res.genus = res.surface->genus;
  res.curve_count = static_cast<long long>(res.surface->curves.size());
  return res;
}

}  // namespace detail

inline SurfaceBuildResult build_surface(const QuotientDatum& d, size_t tile_cap = 1000000,
                                        uint64_t seed = 1) {
  if (d.is_permutation()) {
    PermAction a{d.points};
    std::vector<PermAction::Elt> gens = d.perm_gens;
    auto sign = perm_sign_fn();
    return detail::build_surface_impl<PermAction>(
        a, gens, d.k, sign, tile_cap, [&]() -> Int {
          StabilizerChain<PermAction> chain(a, gens, seed);
          return chain.order();
        });
  }
  require(!d.mat_gens.empty(), Errc::Usage, "empty quotient datum");
  MatAction a(d.mat_ctx);
  std::vector<MatAction::Elt> gens;
  for (const ModMat& m : d.mat_gens) gens.push_back({m, m});  // involutions
  auto sign = mat_sign_fn(d.mat_ctx);
  return detail::build_surface_impl<MatAction>(
      a, gens, d.k, sign, tile_cap, [&]() -> Int {
        StabilizerChain<MatAction> chain(a, gens, seed);
        return chain.order();
      });
}

// --- reports and serialization --------------------------------------------

struct SystoleReport {
  Int curve_count = 0;
  double curve_length = 0;   // 2k * arcosh 2
  double area = 0;           // f2 * pi
  double gauss_bonnet = 0;   // 4 pi (g - 1)
  bool gauss_bonnet_consistent = false;
  double theorem25_bound = 0;  // informational; 0 when genus < 16
  bool systoles_certified = false;
};

inline SystoleReport systole_report(const SurfaceBuildResult& r, int k,
                                    int certificate_analytic_radius = 0) {
  SystoleReport rep;
  rep.curve_count = r.curve_count;
  rep.curve_length = 2.0 * k * std::acosh(2.0);
  double f2 = r.f2.convert_to<double>();
  double g = r.genus.convert_to<double>();
  rep.area = f2 * std::numbers::pi;
  rep.gauss_bonnet = 4.0 * std::numbers::pi * (g - 1.0);
  rep.gauss_bonnet_consistent = std::abs(rep.area - rep.gauss_bonnet) <= 1e-9 * std::max(1.0, rep.area);
  if (g >= 16) {
    double lg = std::log(g);
    rep.theorem25_bound = 57.0 * g / (std::sqrt(lg) * std::sqrt(std::log(std::log(lg))));
  }
  rep.systoles_certified = certificate_analytic_radius >= 4 * k;
  return rep;
}

inline nlohmann::ordered_json surface_to_json(const TessellatedSurface& s) {
  nlohmann::ordered_json j;
  j["k"] = s.k;
  j["f0"] = s.f0;
  j["f1"] = s.f1;
  j["f2"] = s.f2;
  j["genus"] = s.genus;
  auto& tiles = j["tiles"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < s.tile_sign.size(); ++i)
    tiles.push_back({{"id", i}, {"sign", s.tile_sign[i]}});
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : s.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"index", e.index + 1}});
  auto& curves = j["curves"] = nlohmann::ordered_json::array();
  for (const auto& c : s.curves)
    curves.push_back({{"index", c.index + 1}, {"sides", c.sides}});
  return j;
}

inline TessellatedSurface surface_from_json(const nlohmann::json& j) {
  TessellatedSurface s;
  s.k = j.at("k").get<int>();
  s.f0 = j.at("f0").get<long long>();
  s.f1 = j.at("f1").get<long long>();
  s.f2 = j.at("f2").get<long long>();
  s.genus = j.at("genus").get<long long>();
  s.tile_sign.resize(j.at("tiles").size());
  for (const auto& t : j.at("tiles"))
    s.tile_sign.at(t.at("id").get<size_t>()) = t.at("sign").get<int>();
  for (const auto& e : j.at("edges"))
    s.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("index").get<int>() - 1});
  for (const auto& c : j.at("curves")) {
    TessellatedSurface::Curve cv;
    cv.index = c.at("index").get<int>() - 1;
    cv.sides = c.at("sides").get<std::vector<int>>();
    s.curves.push_back(std::move(cv));
  }
  return s;
}

inline void export_surface(const SurfaceBuildResult& r, const std::string& path) {
  require(!r.counts_only && r.surface.has_value(), Errc::CountsOnly,
          "counts-only results have no explicit surface to export");
  std::ofstream os(path);
  require(static_cast<bool>(os), Errc::IoError, "cannot write " + path);
  os << surface_to_json(*r.surface).dump(1) << "\n";
  require(static_cast<bool>(os), Errc::IoError, "write failed for " + path);
}

inline TessellatedSurface import_surface(const std::string& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), Errc::IoError, "cannot read " + path);
  nlohmann::json j;
  is >> j;
  return surface_from_json(j);
}

// The synthetic order-16 datum used by tests and docs: C_2^4 acting on eight
// points, six odd involutions with all gates passing at k = 2.
inline QuotientDatum synthetic_f2_16_datum() {
  QuotientDatum d;
  d.k = 2;
  d.points = 8;
  auto perm = [&](std::initializer_list<std::pair<int, int>> swaps) {
    std::vector<int> img(8);
    for (int i = 0; i < 8; ++i) img[static_cast<size_t>(i)] = i;
    for (auto [x, y] : swaps) std::swap(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]);
    return img;
  };
  d.perm_gens = {
      perm({{0, 1}}),
      perm({{2, 3}}),
      perm({{4, 5}}),
      perm({{6, 7}}),
      perm({{0, 1}, {2, 3}, {4, 5}}),
      perm({{2, 3}, {4, 5}, {6, 7}}),
  };
  return d;
}

}  // namespace coxsys

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "helpers.hpp"

using namespace coxsys;

namespace {

std::vector<int> perm_of(size_t n, std::initializer_list<std::pair<int, int>> swaps) {
  std::vector<int> img(n);
  for (size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
  for (auto [x, y] : swaps) std::swap(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]);
  return img;
}

}  // namespace

TEST_CASE("synthetic order-16 datum builds a genus-5 surface") {
  QuotientDatum d = synthetic_f2_16_datum();
  SurfaceBuildResult r = build_surface(d);
  REQUIRE_FALSE(r.counts_only);
  const TessellatedSurface& s = *r.surface;

  CHECK(s.f2 == 16);
  CHECK(s.f1 == 48);
  CHECK(s.f0 == 24);
  CHECK(s.genus == 5);
  CHECK(s.f1 == 3 * s.f2);
  CHECK(s.f0 == s.f1 / 2);
  CHECK(2 - 2 * s.genus == s.f0 - s.f1 + s.f2);
  CHECK(s.genus == 1 + s.f2 / 4);

  SECTION("double counting") {
    CHECK(6 * s.f2 == 2 * s.f1);  // six sides per tile, two tiles per side
    CHECK(6 * s.f2 == 4 * s.f0);  // six corners per tile, four tiles per vertex
  }

  SECTION("curves: 2k sides each, exact cover, count formula") {
    CHECK(s.curves.size() == static_cast<size_t>(s.f1 / (2 * d.k)));
    CHECK(static_cast<long long>(s.curves.size()) == 6 * (s.genus - 1) / d.k);
    std::vector<int> covered(static_cast<size_t>(s.f1), 0);
    for (const auto& c : s.curves) {
      CHECK(c.sides.size() == static_cast<size_t>(2 * d.k));
      for (int e : c.sides) {
        covered[static_cast<size_t>(e)]++;
        CHECK(s.edges[static_cast<size_t>(e)].index == c.index);
      }
    }
    for (int c : covered) CHECK(c == 1);
  }

  SECTION("decoration signs 2-color the adjacency graph") {
    for (const auto& e : s.edges)
      CHECK(s.tile_sign[static_cast<size_t>(e.a)] != s.tile_sign[static_cast<size_t>(e.b)]);
  }

  SECTION("systole report") {
    SystoleReport rep = systole_report(r, d.k);
    CHECK(rep.curve_count == 12);
    CHECK(rep.curve_length == Catch::Approx(2 * d.k * std::acosh(2.0)));
    CHECK(rep.area == Catch::Approx(16 * std::numbers::pi));
    CHECK(rep.gauss_bonnet == Catch::Approx(4 * std::numbers::pi * 4));
    CHECK(rep.gauss_bonnet_consistent);
    CHECK_FALSE(rep.systoles_certified);
    CHECK(systole_report(r, d.k, 4 * d.k).systoles_certified);
  }

  SECTION("export round trip") {
    std::string path = "coxsys_test_surface.json";
    export_surface(r, path);
    TessellatedSurface back = import_surface(path);
    CHECK(back == s);
    std::remove(path.c_str());
  }
}

TEST_CASE("regularity gates") {
  SECTION("order(sigma_1 sigma_3) = 2 < k = 4 reports (i=2, l=2)") {
    QuotientDatum d;
    d.k = 4;
    d.points = 12;
    d.perm_gens = {
        perm_of(12, {{4, 5}}),                      // sigma_1
        perm_of(12, {{0, 1}}),                      // sigma_2
        perm_of(12, {{6, 7}}),                      // sigma_3
        perm_of(12, {{2, 3}}),                      // sigma_4
        perm_of(12, {{8, 9}}),                      // sigma_5
        perm_of(12, {{0, 2}, {1, 3}, {10, 11}}),    // sigma_6
    };
    try {
      build_surface(d);
      FAIL("expected CONDITION_11_2_VIOLATED");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Condition11_2Violated);
      CHECK(std::string(e.what()).find("i=2") != std::string::npos);
      CHECK(std::string(e.what()).find("l=2") != std::string::npos);
    }
  }

  SECTION("sigma_i sigma_{i+1} = 1 reports condition 11.1") {
    QuotientDatum d = synthetic_f2_16_datum();
    d.perm_gens[1] = d.perm_gens[0];  // sigma_2 = sigma_1
    try {
      build_surface(d);
      FAIL("expected CONDITION_11_1_VIOLATED");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Condition11_1Violated);
    }
  }
}

TEST_CASE("datum validation") {
  SECTION("non-involution generator") {
    QuotientDatum d = synthetic_f2_16_datum();
    std::vector<int> cycle(8);
    for (int i = 0; i < 8; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % 8;
    d.perm_gens[0] = cycle;
    CHECK_THROWS_MATCHES(build_surface(d), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Errc::RelationFailed;
                         }));
  }
  SECTION("even permutation breaks the sign witness") {
    QuotientDatum d = synthetic_f2_16_datum();
    d.perm_gens[0] = perm_of(8, {{0, 1}, {2, 3}});  // even involution
    try {
      build_surface(d);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == Errc::Nonorientable || e.code() == Errc::RelationFailed));
    }
  }
}

TEST_CASE("counts-only mode above the tile cap") {
  QuotientDatum d = synthetic_f2_16_datum();
  SurfaceBuildResult r = build_surface(d, 8);
  CHECK(r.counts_only);
  CHECK(r.f2 == 16);
  CHECK(r.f1 == 48);
  CHECK(r.f0 == 24);
  CHECK(r.genus == 5);
  CHECK(r.curve_count == 12);
  CHECK_THROWS_MATCHES(export_surface(r, "nope.json"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::CountsOnly; }));
}

TEST_CASE("genus arithmetic example: f2 = 16 forces g = 5") {
  long long f2 = 16, f1 = 3 * f2, f0 = f1 / 2;
  CHECK(f0 - f1 + f2 == -8);
  CHECK(2 - 2 * 5 == -8);
}

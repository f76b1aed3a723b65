#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>

#include "helpers.hpp"

using namespace coxsys;

TEST_CASE("ball sizes and closure") {
  for (int k : {3, 4, 5}) {
    TitsContext t(k);
    Ball b = ball_enumerate(t, 2);
    REQUIRE(b.size_by_radius.size() == 3);
    CHECK(b.size_by_radius[0] == 1);
    CHECK(b.size_by_radius[1] == 7);
    CHECK(b.size_by_radius[2] == 31);
  }

  TitsContext t(4);
  Ball b = ball_enumerate(t, 3);
  SECTION("right and left closure with depth parity") {
    for (const auto& e : b.elems) {
      if (e.depth >= b.radius) continue;
      for (int g = 0; g < 6; ++g) {
        Mat6 right = e.matrix * t.reflection(g);
        auto it = b.index.find(right.key());
        REQUIRE(it != b.index.end());
        int nd = b.elems[it->second].depth;
        CHECK(std::abs(nd - e.depth) == 1);
        Mat6 left = t.reflection(g) * e.matrix;
        CHECK(b.index.count(left.key()) == 1);
      }
    }
  }
  SECTION("girth: the shortest nontrivial loop has length 4") {
    // no element of depth 1 or 3 equals a depth-<=2 element: BFS dedup already
    // guarantees uniqueness; the girth shows as |B_2| = 31 < 37 = 1 + 6 + 30
    CHECK(b.size_by_radius[2] == 31);
    CHECK(t.rho({0, 1, 0, 1}).is_identity());
  }
}

TEST_CASE("ball sizes match the word-combinatorics oracle up to radius 4") {
  TitsContext t(4);
  Ball b = ball_enumerate(t, 4);
  auto oracle = ball_sizes_word_oracle(CoxeterMatrix::wk(4), 4);
  REQUIRE(oracle.size() == b.size_by_radius.size());
  for (size_t i = 0; i < oracle.size(); ++i) CHECK(oracle[i] == b.size_by_radius[i]);
}

TEST_CASE("ball cache round trip") {
  TitsContext t(4);
  Ball b = ball_enumerate(t, 3);
  std::string path = "coxsys_test_ball_cache.txt";
  ball_save(b, path);
  auto loaded = ball_load(t, 3, path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->size() == b.size());
  CHECK(loaded->size_by_radius == b.size_by_radius);
  CHECK_FALSE(ball_load(t, 4, path).has_value());  // stale radius rejected
  TitsContext t5(5);
  CHECK_FALSE(ball_load(t5, 3, path).has_value());  // wrong k rejected
  std::remove(path.c_str());
}

TEST_CASE("congruence image is a homomorphism") {
  TitsContext t(4);
  std::mt19937_64 rng(29);
  auto ctx = std::make_shared<const ModContext>(pow3(2), t.field()->psi());
  for (int trial = 0; trial < 1000; ++trial) {
    Word a, bw;
    for (int i = 0; i < static_cast<int>(rng() % 6); ++i) a.push_back(static_cast<int>(rng() % 6));
    for (int i = 0; i < static_cast<int>(rng() % 6); ++i) bw.push_back(static_cast<int>(rng() % 6));
    ModMat ia = ModMat::from_exact(ctx, t.rho(a));
    ModMat ib = ModMat::from_exact(ctx, t.rho(bw));
    ModMat iab = ModMat::from_exact(ctx, t.rho(word_concat(a, bw)));
    CHECK(ia * ib == iab);
  }
}

TEST_CASE("membership in H(k)") {
  TitsContext t(4);
  CHECK(in_H(t, {}, 1));
  for (int m = 1; m <= 4; ++m) CHECK_FALSE(in_H(t, {0}, m));

  SECTION("membership is conjugation invariant (H is normal)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      Word w, v;
      for (int i = 0; i < static_cast<int>(rng() % 7); ++i) w.push_back(static_cast<int>(rng() % 6));
      for (int i = 0; i < static_cast<int>(rng() % 4); ++i) v.push_back(static_cast<int>(rng() % 6));
      Word conj = word_concat(word_concat(v, w), word_inverse(v));
      CHECK(in_H(t, w, 2) == in_H(t, conj, 2));
    }
  }
}

TEST_CASE("avoidance certificates") {
  TitsContext t(4);
  SECTION("k=4, m=1, radius=2: exhaustive pass over the 31 ball elements") {
    Ball b = ball_enumerate(t, 2);
    AvoidanceCertificate c = ball_avoidance_certificate(t, 1, b);
    CHECK(c.exhaustive_pass);
    CHECK(c.elements_checked == 30);
    CHECK(c.analytic_radius == 1);
    CHECK_FALSE(c.criterion18_covered);
  }
  SECTION("monotonicity in m at fixed radius") {
    Ball b = ball_enumerate(t, 4);
    int prev_analytic = 0;
    for (int m = 1; m <= 6; ++m) {
      AvoidanceCertificate c = ball_avoidance_certificate(t, m, b);
      CHECK(c.exhaustive_pass);
      CHECK(c.analytic_radius >= prev_analytic);
      prev_analytic = c.analytic_radius;
    }
  }
  SECTION("criterion-18 coverage flag") {
    Ball b = ball_enumerate(t, 1);
    CHECK(ball_avoidance_certificate(t, 16, b).criterion18_covered);
    CHECK_FALSE(ball_avoidance_certificate(t, 15, b).criterion18_covered);
  }
  SECTION("any H-member in the ball would have even sign") {
    // det rho(w) = (-1)^{l(w)} and membership forces determinant 1 mod 3;
    // on enumerated balls no nontrivial member exists, so the check is that
    // every identity-image element found (none) has even depth.
    Ball b = ball_enumerate(t, 3);
    for (const auto& e : b.elems)
      if (in_H(t, e.witness, 1)) CHECK(e.depth % 2 == 0);
  }
}

TEST_CASE("stabilizer chain on a toy permutation datum") {
  // six commuting transpositions generating (Z/2)^6
  PermAction a{12};
  std::vector<PermAction::Elt> gens;
  for (int i = 0; i < 6; ++i) {
    PermAction::Elt g = a.identity();
    std::swap(g[static_cast<size_t>(2 * i)], g[static_cast<size_t>(2 * i + 1)]);
    gens.push_back(std::move(g));
  }
  StabilizerChain<PermAction> chain(a, gens, 99);
  CHECK(chain.order() == 64);
  auto closure = chain.closure_order(1000);
  REQUIRE(closure.has_value());
  CHECK(*closure == 64);
  CHECK(chain.membership_sanity(100, 5) == 100);
  // a genuine non-member: a 3-cycle
  PermAction::Elt three = a.identity();
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  CHECK_FALSE(chain.is_member(three));
}

TEST_CASE("stabilizer chain order is seed independent (k=3, p=3)") {
  TitsContext t(3);
  auto ctx = std::make_shared<const ModContext>(Int(3), t.field()->psi());
  std::vector<MatAction::Elt> gens;
  for (int i = 0; i < 6; ++i) {
    ModMat m = ModMat::from_exact(ctx, t.reflection(i));
    gens.push_back({m, m});
  }
  MatAction a(ctx);
  Int first;
  for (uint64_t seed : {1ull, 2ull}) {
    StabilizerChain<MatAction> chain(a, gens, seed);
    if (seed == 1)
      first = chain.order();
    else
      CHECK(chain.order() == first);
  }
  CHECK(first > 1000000);  // large image: closure cross-check not applicable
}

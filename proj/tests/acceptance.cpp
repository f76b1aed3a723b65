// Acceptance suite: runs each criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"

using namespace coxsys;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> body;
  double budget_seconds = 0;  // 0 = no budget
};

void run_criterion(int number, const Criterion& c) {
  std::ostringstream note;
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string what;
  try {
    c.body(note);
  } catch (const std::exception& e) {
    ok = false;
    what = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
    ok = false;
    what = "runtime " + std::to_string(secs) + "s exceeds budget " +
           std::to_string(c.budget_seconds) + "s";
  }
  if (!ok) g_failures++;
  std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, c.name.c_str(), secs,
              note.str().empty() ? "" : (" " + note.str()).c_str(),
              what.empty() ? "" : ("  -- " + what).c_str());
  std::fflush(stdout);
}

void check(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::VerificationFailed, msg);
}

}  // namespace

int main() {
  // 1. Minimal polynomials, exact; degree phi(2k)/2 for 3 <= k <= 30; < 1 s.
  run_criterion(1, {"minimal polynomials x-1, x^2-2, x^2-x-1, x^2-3; degrees phi(2k)/2",
                    [](std::ostringstream&) {
                      check(make_context(3)->psi() == Poly{-1, 1}, "psi(k=3)");
                      check(make_context(4)->psi() == Poly{-2, 0, 1}, "psi(k=4)");
                      check(make_context(5)->psi() == Poly{-1, -1, 1}, "psi(k=5)");
                      check(make_context(6)->psi() == Poly{-3, 0, 1}, "psi(k=6)");
                      for (int k = 3; k <= 30; ++k)
                        check(make_context(k)->degree() ==
                                  static_cast<int>(euler_phi(2 * static_cast<unsigned>(k)) / 2),
                              "degree at k=" + std::to_string(k));
                    },
                    1.0});

  // 2. Tits relations for k in 3..8, plus sharp order of s1 s3; < 10 s.
  run_criterion(2, {"18 defining relations exact for k=3..8; (rho(s1)rho(s3))^l != 1 for l<k",
                    [](std::ostringstream&) {
                      for (int k = 3; k <= 8; ++k) {
                        TitsContext t(k);
                        RelationReport rep = verify_relations(t);
                        check(rep.ok, "relations failed at k=" + std::to_string(k));
                        Mat6 g = t.rho({0, 2});
                        Mat6 p = g;
                        for (int l = 1; l < k; ++l) {
                          check(!p.is_identity(), "premature (s1 s3)^l = 1");
                          p = p * g;
                        }
                        check(p.is_identity(), "(s1 s3)^k != 1");
                      }
                    },
                    10.0});

  // 3. Gram determinant: two exact routes agree with -4c^3(2-c)(4+c)^2.
  run_criterion(3, {"Gram determinant routes agree; value -100 at k=3",
                    [](std::ostringstream&) {
                      for (int k = 3; k <= 8; ++k) {
                        TitsContext t(k);
                        AlgebraicInt eig = gram_det_eigen_oracle(t.field());
                        AlgebraicInt closed = gram_det_closed_form(t.field());
                        check(t.gram_det() == eig, "elimination vs eigenvalue oracle, k=" +
                                                       std::to_string(k));
                        check(eig == closed, "closed form mismatch, k=" + std::to_string(k));
                      }
                      check(TitsContext(3).gram_det().is_int(-100), "det at k=3");
                    }});

  // 4. Parity: det rho(w) = (-1)^{l(w)} over B_4 at k = 4, exhaustive.
  run_criterion(4, {"det rho(w) = (-1)^l(w) over B_4 (k=4, exhaustive)",
                    [](std::ostringstream& note) {
                      TitsContext t(4);
                      Ball b = ball_enumerate(t, 4);
                      for (const auto& e : b.elems) {
                        AlgebraicInt d = det(e.matrix);
                        check(d.is_int(e.depth % 2 == 0 ? 1 : -1),
                              "parity fails at " + word_to_string(e.witness));
                      }
                      note << "(" << b.size() << " elements)";
                    }});

  // 5. Ball sizes 1, 7, 31 and agreement with the reduced-word oracle to r=6.
  run_criterion(5, {"|B_0|,|B_1|,|B_2| = 1,7,31 (k=3,4,5); BFS = word oracle through radius 6 (k=4)",
                    [](std::ostringstream& note) {
                      for (int k : {3, 4, 5}) {
                        TitsContext t(k);
                        Ball b = ball_enumerate(t, 2);
                        check(b.size_by_radius == std::vector<size_t>{1, 7, 31},
                              "small ball sizes at k=" + std::to_string(k));
                      }
                      TitsContext t(4);
                      Ball b = ball_enumerate(t, 6);
                      auto oracle = ball_sizes_word_oracle(CoxeterMatrix::wk(4), 6);
                      check(oracle.size() == b.size_by_radius.size(), "radius mismatch");
                      for (size_t i = 0; i < oracle.size(); ++i)
                        check(oracle[i] == b.size_by_radius[i],
                              "size mismatch at radius " + std::to_string(i));
                      std::ostringstream sizes;
                      for (size_t s : b.size_by_radius) sizes << s << " ";
                      note << "(sizes: " << sizes.str() << ")";
                    }});

  // 6. Norm bounds: ||rho(w)-1|| < 3^l over B_6 for k=4,5; ||F_w|| <= 2^n on
  //    1000 random index words of length <= 12. Zero violations.
  run_criterion(6, {"||rho(w)-1|| < 3^l over B_6 (k=4,5); ||F_w|| <= 2^n on 1000 random words",
                    [](std::ostringstream& note) {
                      size_t checked = 0;
                      for (int k : {4, 5}) {
                        TitsContext t(k);
                        Ball b = ball_enumerate(t, 6);
                        NormCheckReport rep = check_rho_norms_ball(t, b);
                        check(rep.failures == 0, "rho norm violation at k=" + std::to_string(k));
                        checked += rep.checked;
                      }
                      TitsContext t4(4);
                      NormCheckReport l20 = check_operator_norms(t4, 1000, 12, 20260810);
                      check(l20.failures == 0 && l20.checked == 1000, "operator norm violation");
                      note << "(" << checked << " ball elements)";
                    }});

  // 7. Ball avoidance: exhaustive at k=4, 3^6, radius 6; analytic certificates
  //    for every m in 1..16 consistent with the exhaustive data. < 10 min.
  run_criterion(7, {"avoidance: B_6 trivial mod 3^6 (k=4, exhaustive); analytic m=1..16 consistent",
                    [](std::ostringstream& note) {
                      TitsContext t(4);
                      Ball b = ball_enumerate(t, 6);
                      for (int m = 1; m <= 16; ++m) {
                        AvoidanceCertificate c = ball_avoidance_certificate(t, m, b);
                        check(c.exhaustive_pass,
                              "nontrivial element with trivial image at m=" + std::to_string(m));
                        check(c.analytic_radius == m, "analytic radius");
                        if (m == 16) check(c.criterion18_covered, "4k coverage at m=16");
                      }
                      note << "(" << b.size() - 1 << " nontrivial elements x 16 moduli)";
                    },
                    600.0});

  // 8. Loop reducer: 500 random admissible loops per k in {4, 6}; each
  //    reduces in exactly l/2 moves with a valid replay.
  run_criterion(8, {"loop reducer: 500 random admissible loops per k in {4,6}, valid replays",
                    [](std::ostringstream&) {
                      for (int k : {4, 6}) {
                        CoxeterMatrix m = CoxeterMatrix::wk(k);
                        TitsContext t(k);
                        Partition p = Partition::standard_rb();
                        auto oracle = t.identity_oracle();
                        std::mt19937_64 rng(20260810u + static_cast<unsigned>(k));
                        for (int trial = 0; trial < 500; ++trial) {
                          CyclicWord loop = coxsys::testing::random_admissible_loop(k, rng);
                          auto moves = reduce_loop(loop, m, p, oracle);
                          check(moves.size() * 2 == loop.size(), "move count != l/2");
                          coxsys::testing::replay_certificate(loop, moves, m, p, oracle);
                        }
                      }
                    }});

  // 9. Hexagon: side length and angles to 1e-9, translation length to 1e-8.
  run_criterion(9, {"hexagon: L = arcosh 2 and right angles (1e-9); translation 2L (1e-8)",
                    [](std::ostringstream&) {
                      hyp::HexagonModel h = hyp::build_hexagon();
                      check(std::abs(h.side_length - std::acosh(2.0)) < 1e-9, "side length");
                      for (double a : h.angles)
                        check(std::abs(a - std::numbers::pi / 2) < 1e-9, "interior angle");
                      for (int i = 0; i < 6; ++i) {
                        hyp::Isometry tr = h.refl[static_cast<size_t>((i + 5) % 6)] *
                                           h.refl[static_cast<size_t>((i + 1) % 6)];
                        check(std::abs(tr.translation_length() - 2 * h.side_length) < 1e-8,
                              "translation length along Delta_" + std::to_string(i + 1));
                      }
                    }});

  // 10. Monte-Carlo length lemmas: 1e4 arcs, checks (a) and (b), zero
  //     counterexamples, fixed seed; < 1 min.
  run_criterion(10, {"length experiments: 10^4 arcs at k=4, zero counterexamples",
                     [](std::ostringstream& note) {
                       hyp::HexagonModel h = hyp::build_hexagon();
                       hyp::LengthExperimentReport rep =
                           hyp::length_experiments(h, 10000, 4, 20260810);
                       check(rep.counterexamples_a == 0, "check (a) counterexample");
                       check(rep.counterexamples_b == 0, "check (b) counterexample");
                       check(rep.windows_b > 0, "no (b) windows sampled");
                       std::ostringstream m;
                       m.precision(3);
                       m << "(margins: a > " << rep.min_margin_a << ", b > " << rep.min_margin_b
                         << ")";
                       note << m.str();
                     },
                     60.0});

  // 11. Surface builder: structural invariants on the synthetic f2 = 16
  //     datum, plus any mod-p quotient with <= 10^6 elements passing the
  //     gates; export round-trip equality.
  run_criterion(11, {"surface: f2=16 datum invariants, export round trip, mod-p quotient policy",
                     [](std::ostringstream& note) {
                       QuotientDatum d = synthetic_f2_16_datum();
                       SurfaceBuildResult r = build_surface(d);
                       check(!r.counts_only, "explicit build expected");
                       const TessellatedSurface& s = *r.surface;
                       check(s.f2 == 16 && s.f1 == 3 * s.f2 && s.f0 == s.f1 / 2, "face counts");
                       check(s.genus == 1 + s.f2 / 4, "genus formula");
                       check(2 - 2 * s.genus == s.f0 - s.f1 + s.f2, "Euler characteristic");
                       std::vector<int> covered(static_cast<size_t>(s.f1), 0);
                       for (const auto& c : s.curves) {
                         check(c.sides.size() == static_cast<size_t>(2 * d.k),
                               "curve length != 2k");
                         for (int e : c.sides) covered[static_cast<size_t>(e)]++;
                       }
                       for (int c : covered) check(c == 1, "side cover not exact");
                       for (const auto& e : s.edges)
                         check(s.tile_sign[static_cast<size_t>(e.a)] !=
                                   s.tile_sign[static_cast<size_t>(e.b)],
                               "orientability");
                       SystoleReport rep = systole_report(r, d.k);
                       check(std::abs(rep.area - 16 * std::numbers::pi) < 1e-9, "area f2*pi");
                       check(std::abs(rep.area - rep.gauss_bonnet) < 1e-9, "Gauss-Bonnet");
                       std::string path = "acceptance_surface.json";
                       export_surface(r, path);
                       TessellatedSurface back = import_surface(path);
                       check(back == s, "export round trip");
                       std::remove(path.c_str());

                       // mod-p quotient at (k=3, p=3): explicit iff small enough
                       TitsContext t(3);
                       auto ctx = std::make_shared<const ModContext>(Int(3), t.field()->psi());
                       std::vector<MatAction::Elt> gens;
                       QuotientDatum md;
                       md.k = 3;
                       md.mat_ctx = ctx;
                       for (int i = 0; i < 6; ++i)
                         md.mat_gens.push_back(ModMat::from_exact(ctx, t.reflection(i)));
                       SurfaceBuildResult mr = build_surface(md, 1000000);
                       if (mr.counts_only) {
                         check(mr.f2 > 1000000, "counts-only despite a small quotient");
                         check(mr.f1 == 3 * mr.f2 && mr.f0 == mr.f1 / 2, "counts-only face counts");
                         check(mr.genus == 1 + mr.f2 / 4, "counts-only genus");
                         note << "(mod-3 quotient order " << mr.f2.str() << ": counts-only)";
                       } else {
                         note << "(mod-3 quotient built explicitly)";
                       }
                     }});

  // 12. Quotient order at (k=3, p=3): identical across 5 seeds; closure
  //     cross-check whenever order <= 10^6; membership sanity 100/100.
  run_criterion(12, {"stabilizer chain (k=3, p=3): 5 seeds agree; membership 100/100",
                     [](std::ostringstream& note) {
                       TitsContext t(3);
                       auto ctx = std::make_shared<const ModContext>(Int(3), t.field()->psi());
                       std::vector<MatAction::Elt> gens;
                       for (int i = 0; i < 6; ++i) {
                         ModMat m = ModMat::from_exact(ctx, t.reflection(i));
                         gens.push_back({m, m});
                       }
                       MatAction a(ctx);
                       Int order;
                       for (uint64_t seed = 1; seed <= 5; ++seed) {
                         StabilizerChain<MatAction> chain(a, gens, seed);
                         if (seed == 1) {
                           order = chain.order();
                           check(chain.membership_sanity(100, 17) == 100, "membership sanity");
                           if (order <= 1000000) {
                             auto closure = chain.closure_order(2000000);
                             check(closure.has_value() && *closure == order, "closure check");
                           }
                         } else {
                           check(chain.order() == order, "seed dependence at seed " +
                                                             std::to_string(seed));
                         }
                       }
                       note << "(order " << order.str() << ")";
                     }});

  // 13. Constants and the bound chain.
  run_criterion(13, {"delta = 9.4246 +- 1e-4; 6 delta = 56.547 +- 1e-3; chain + Landau oracle",
                     [](std::ostringstream&) {
                       double d = delta_constant();
                       check(std::abs(d - 9.4246) <= 1e-4, "delta");
                       check(std::abs(6 * d - 56.547) <= 1e-3, "6 delta");
                       check(9.5 == 57.0 / 6.0, "delta_plus = 57/6");
                       auto rows = totient_primorials(8);
                       ChainReport rep = bound_chain(rows, 9.5);
                       check(rep.monotone_242 && rep.monotone_243 && rep.monotone_244,
                             "chain not monotone once true");
                       for (const auto& r : rep.rows) {
                         check(!r.indeterminate, "indeterminate margin");
                         check(r.margin_242 >= 1e-6 && r.margin_243 >= 1e-6 &&
                                   r.margin_244 >= 1e-6,
                               "margin below 1000x error budget");
                       }
                       for (const auto& r : landau_table(8))
                         check(std::abs(r.ratio - r.ratio_oracle) <=
                                   1e-12 * std::max(1.0, std::abs(r.ratio)),
                               "Landau oracle disagreement");
                     }});

  if (g_failures == 0) {
    std::printf("ALL %d CRITERIA PASSED\n", 13);
    return 0;
  }
  std::printf("%d CRITERIA FAILED\n", g_failures);
  return 1;
}

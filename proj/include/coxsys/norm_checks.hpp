#pragma once

#include <random>

#include "coxsys/ball.hpp"
#include "coxsys/congruence.hpp"

namespace coxsys {

struct NormCheckReport {
  size_t checked = 0;
  size_t failures = 0;
  double max_ratio = 0;  // worst observed norm / bound
  std::vector<std::string> failure_words;
};

// The matrix of E_{i,j}: v -> B(alpha_j, v) alpha_i; row i is row j of the
// Gram form, all other rows zero.
inline Mat6 e_unit_matrix(const TitsContext& t, int i, int j) {
  Mat6 m(t.field());
  for (int b = 0; b < 6; ++b) m.at(i, b) = t.gram().at(j, b);
  return m;
}

// Lemma-20 style check: for random index words w = i_1...i_n the product
// F_w = F_{i_1}...F_{i_n} collapses to a_w E_{i_1,i_n} with
// a_w = prod B(alpha_{i_t}, alpha_{i_{t+1}}), and ||a_w|| <= 2^{n-1}.
// The coordinate-extraction route must agree with the closed form.
inline NormCheckReport check_operator_norms(const TitsContext& t, int samples, int max_len,
                                            uint64_t seed) {
  NormCheckReport rep;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_len));
    Word w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = static_cast<int>(rng() % 6);

    AlgebraicInt a = AlgebraicInt::from_int(t.field(), 1);
    for (int i = 0; i + 1 < n; ++i)
      a *= t.gram().at(w[static_cast<size_t>(i)], w[static_cast<size_t>(i + 1)]);

    Mat6 fw = e_unit_matrix(t, w[0], w[0]);
    for (int i = 1; i < n; ++i)
      fw = fw * e_unit_matrix(t, w[static_cast<size_t>(i)], w[static_cast<size_t>(i)]);
    Mat6 coords = t.e_coordinates(fw);
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = 0; j < 6 && ok; ++j) {
        const AlgebraicInt& want =
            (i == w[0] && j == w[static_cast<size_t>(n - 1)]) ? a : AlgebraicInt::zero(t.field());
        if (coords.at(i, j) != want) ok = false;
      }
    Int bound = pow_int(2, static_cast<unsigned>(n - 1));
    if (!norm_leq(a, bound)) ok = false;
    if (!a.is_zero()) {
      NormEnclosure e = linf_enclosure(a);
      rep.max_ratio = std::max(rep.max_ratio, e.hi / bound.convert_to<double>());
    }
    rep.checked++;
    if (!ok) {
      rep.failures++;
      rep.failure_words.push_back(word_to_string(w));
    }
  }
  require(rep.failures == 0, Errc::BoundViolated, "operator norm bound violated");
  return rep;
}

// Lemma-21 style check over an enumerated ball: ||rho(w) - 1|| < 3^{l(w)}
// in the E-coordinate norm, with l(w) the Bruhat length (= BFS depth).
inline NormCheckReport check_rho_norms_ball(const TitsContext& t, const Ball& ball) {
  NormCheckReport rep;
  for (size_t i = 1; i < ball.elems.size(); ++i) {
    const auto& e = ball.elems[i];
    Mat6 coords = rho_minus_one_coords(t, e.matrix);
    Int bound = pow3(static_cast<unsigned>(e.depth));
    rep.checked++;
    if (!t.coord_norm_less_than(coords, bound)) {
      rep.failures++;
      rep.failure_words.push_back(word_to_string(e.witness));
      continue;
    }
    double worst = 0;
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c)
        if (!coords.at(r, c).is_zero()) worst = std::max(worst, linf_enclosure(coords.at(r, c)).hi);
    rep.max_ratio = std::max(rep.max_ratio, worst / bound.convert_to<double>());
  }
  require(rep.failures == 0, Errc::BoundViolated, "||rho(w)-1|| bound violated on the ball");
  return rep;
}

// The same bound holds a fortiori with plain word length in place of Bruhat
// length (the subword expansion never uses reducedness); spot-checked on
// random, possibly unreduced, words.
inline NormCheckReport check_rho_norms_random(const TitsContext& t, int samples, int max_len,
                                              uint64_t seed) {
  NormCheckReport rep;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_len));
    Word w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = static_cast<int>(rng() % 6);
    Mat6 coords = rho_minus_one_coords(t, t.rho(w));
    rep.checked++;
    if (!t.coord_norm_less_than(coords, pow3(static_cast<unsigned>(n)))) {
      rep.failures++;
      rep.failure_words.push_back(word_to_string(w));
    }
  }
  require(rep.failures == 0, Errc::BoundViolated, "||rho(w)-1|| bound violated on random words");
  return rep;
}

}  // namespace coxsys

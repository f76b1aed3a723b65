#pragma once

#include <random>

#include "coxsys/coxsys.hpp"

namespace coxsys::testing {

// Random null-homotopic cyclic words built by splicing conjugated relators
// into one another, filtered to the loop-reducer preconditions
// l_R(w) < 2k and l_B(w) < 2k.
inline CyclicWord random_admissible_loop(int k, std::mt19937_64& rng) {
  auto red_count = [](const Word& w) {
    long r = 0;
    for (int x : w) r += (x % 2 == 0);
    return r;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Word w;
    int pieces = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < pieces; ++p) {
      Word relator;
      if (rng() % 2 == 0) {
        int i = static_cast<int>(rng() % 6);
        relator = {i, i};
      } else {
        int i = static_cast<int>(rng() % 6);
        int j = (i + 1) % 6;
        relator = {i, j, i, j};
      }
      Word conj;
      int clen = static_cast<int>(rng() % 3);
      for (int c = 0; c < clen; ++c) conj.push_back(static_cast<int>(rng() % 6));
      Word piece = word_concat(word_concat(conj, relator), word_inverse(conj));
      size_t pos = w.empty() ? 0 : rng() % (w.size() + 1);
      w.insert(w.begin() + static_cast<long>(pos), piece.begin(), piece.end());
    }
    long lr = red_count(w);
    long lb = static_cast<long>(w.size()) - lr;
    if (w.empty() || lr >= 2 * k || lb >= 2 * k) continue;
    return CyclicWord(w);
  }
  fail(Errc::Internal, "could not sample an admissible loop");
}

// Replays a homotopy certificate, checking that every intermediate word is
// still a loop, and returns the number of moves applied.
inline size_t replay_certificate(const CyclicWord& start, const std::vector<HomotopyMove>& moves,
                                 const CoxeterMatrix& m, const Partition& p,
                                 const IdentityOracle& oracle) {
  CyclicWord cur = start;
  require(oracle(cur.letters()), Errc::NotALoop, "start is not a loop");
  for (const auto& mv : moves) {
    cur = apply_move(cur, mv, m, p);
    require(cur.empty() || oracle(cur.letters()), Errc::NotALoop,
            "intermediate word is not a loop");
  }
  require(cur.empty(), Errc::VerificationFailed, "replay did not empty the word");
  return moves.size();
}

}  // namespace coxsys::testing

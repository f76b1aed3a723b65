#pragma once

#include <functional>

#include "coxsys/reduce.hpp"

namespace coxsys {

// A certificate move on a cyclic loop. Both kinds shorten the word by two
// letters: DELETE_TT removes an adjacent equal pair, SQUARE_SUS removes the
// two s letters around a commuting segment u (the rectangle of squares in
// the Cayley complex). Positions refer to the canonical rotation of the
// cyclic word the move is applied to.
struct HomotopyMove {
  enum class Kind { DeleteTT, SquareSus };
  Kind kind;
  int position;
  int s = -1;       // the deleted letter (t for DELETE_TT, s for SQUARE_SUS)
  Word u;           // SQUARE_SUS only: the commuting segment between the two s

  bool operator==(const HomotopyMove& o) const {
    return kind == o.kind && position == o.position && s == o.s && u == o.u;
  }
};

// Fallback identity oracle through Tits reduction; W(k) callers should use
// the exact matrix oracle instead. Fails if the canonicalization cap is hit
// while the result is still ambiguous.
inline IdentityOracle reduce_identity_oracle(const CoxeterMatrix& m, size_t cap = 100000) {
  return [&m, cap](const Word& w) {
    ReduceResult r = reduce(w, m, cap);
    require(r.canonical || !r.word.empty(), Errc::CapExceeded,
            "identity check inconclusive under the reduction cap");
    return r.word.empty();
  };
}

// Applies a move to a cyclic word, validating the certificate structure, and
// returns the re-canonicalized result.
inline CyclicWord apply_move(const CyclicWord& cw, const HomotopyMove& mv,
                             const CoxeterMatrix& m, const Partition& p) {
  const Word& w = cw.letters();
  int n = static_cast<int>(w.size());
  require(n >= 2, Errc::Internal, "move on a too-short word");
  require(mv.position >= 0 && mv.position < n, Errc::Internal, "move position out of range");
  int q;
  if (mv.kind == HomotopyMove::Kind::DeleteTT) {
    q = (mv.position + 1) % n;
    require(w[mv.position] == w[q] && w[mv.position] == mv.s, Errc::Internal,
            "DELETE_TT letters do not match");
  } else {
    int ulen = static_cast<int>(mv.u.size());
    q = (mv.position + ulen + 1) % n;
    require(w[mv.position] == mv.s && w[q] == mv.s, Errc::Internal,
            "SQUARE_SUS endpoints do not match");
    require(!p.is_red(mv.s), Errc::Internal, "SQUARE_SUS letter must be blue");
    for (int i = 0; i < ulen; ++i) {
      int letter = w[(mv.position + 1 + i) % n];
      require(letter == mv.u[static_cast<size_t>(i)], Errc::Internal,
              "SQUARE_SUS segment does not match");
      require(p.is_red(letter) && m.at(letter, mv.s) == 2, Errc::Internal,
              "SQUARE_SUS segment letter must be red and commute with s");
    }
  }
  Word next;
  next.reserve(static_cast<size_t>(n) - 2);
  for (int i = 0; i < n; ++i)
    if (i != mv.position && i != q) next.push_back(w[i]);
  return CyclicWord(std::move(next));
}

// Constructive loop reducer. For a cyclic loop w with l_R(w) < gamma(W_R)
// and l_B(w) < gamma(W_B) over a right-angled partition, produces exactly
// l(w)/2 moves whose replay empties the word.
//
// Site selection: an adjacent equal pair anywhere is deleted first (smallest
// position). Otherwise the word is split as u_1 s_1 ... u_m s_m with blue
// s_i; a pair of cyclically consecutive blues qualifies when s_i = s_{i+1}
// and the image of the red segment u between them centralizes s_i, i.e. its
// support lies in R(s_i) = {r in R : m(r, s_i) = 2}. Among qualifying pairs
// the one minimizing l(u) wins, ties broken by smallest starting index.
inline std::vector<HomotopyMove> reduce_loop(const CyclicWord& loop, const CoxeterMatrix& m,
                                             const Partition& p,
                                             const IdentityOracle& oracle_in = nullptr) {
  m.check_word(loop.letters());
  PartitionReport rep = check_partition(m, p);
  require(rep.right_angled, Errc::NotRightAngled, "partition is not right-angled");

  long lr = 0, lb = 0;
  for (int x : loop.letters()) (p.is_red(x) ? lr : lb)++;
  require(rep.red_girth == kInfEntry || lr < rep.red_girth, Errc::PreconditionLength,
          "l_R(w) = " + std::to_string(lr) + " must be < girth(W_R) = " +
              std::to_string(rep.red_girth));
  require(rep.blue_girth == kInfEntry || lb < rep.blue_girth, Errc::PreconditionLength,
          "l_B(w) = " + std::to_string(lb) + " must be < girth(W_B) = " +
              std::to_string(rep.blue_girth));

  IdentityOracle oracle = oracle_in ? oracle_in : reduce_identity_oracle(m);
  require(loop.empty() || oracle(loop.letters()), Errc::NotALoop,
          "word does not represent the identity");

  std::vector<int> red_of_s(static_cast<size_t>(m.size()), 0);
  for (int g : p.red) red_of_s[static_cast<size_t>(g)] = 1;

  std::vector<HomotopyMove> moves;
  CyclicWord cur = loop;
  while (!cur.empty()) {
    const Word& w = cur.letters();
    int n = static_cast<int>(w.size());
    require(n % 2 == 0, Errc::NotALoop, "loops have even length");

    int tt = -1;
    for (int i = 0; i < n; ++i)
      if (w[i] == w[(i + 1) % n]) { tt = i; break; }
    if (tt >= 0) {
      HomotopyMove mv{HomotopyMove::Kind::DeleteTT, tt, w[tt], {}};
      cur = apply_move(cur, mv, m, p);
      moves.push_back(std::move(mv));
      continue;
    }

    std::vector<int> blues;
    for (int i = 0; i < n; ++i)
      if (!red_of_s[static_cast<size_t>(w[i])]) blues.push_back(i);
    require(blues.size() >= 2, Errc::Internal,
            "no deletion site and fewer than two blue letters; input was not a loop");

    int best_pos = -1;
    Word best_u;
    for (size_t j = 0; j < blues.size(); ++j) {
      int pj = blues[j];
      int pn = blues[(j + 1) % blues.size()];
      if (w[pj] != w[pn]) continue;
      Word u;
      for (int i = (pj + 1) % n; i != pn; i = (i + 1) % n) u.push_back(w[i]);
      // sigma_j == sigma_{j+1} iff the segment's image centralizes s = w[pj].
      Word ured = reduce(u, m).word;
      bool central = true;
      for (int r : letter_set(ured))
        if (m.at(r, w[pj]) != 2) { central = false; break; }
      if (!central) continue;
      if (best_pos < 0 || u.size() < best_u.size()) {
        best_pos = pj;
        best_u = std::move(u);
      }
    }
    require(best_pos >= 0, Errc::Internal,
            "no qualifying sus site; input violated the loop precondition");
    require(best_u.size() == reduce(best_u, m).word.size(), Errc::Internal,
            "selected segment is not reduced");
    HomotopyMove mv{HomotopyMove::Kind::SquareSus, best_pos, w[best_pos], best_u};
    cur = apply_move(cur, mv, m, p);
    moves.push_back(std::move(mv));
  }
  require(moves.size() * 2 == loop.size(), Errc::Internal, "move count must be l(w)/2");
  return moves;
}

}  // namespace coxsys

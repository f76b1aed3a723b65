#pragma once

#include <deque>
#include <map>
#include <set>

#include "coxsys/coxeter_matrix.hpp"

namespace coxsys {

// One elementary reduction in the sense of Tits: type 1 deletes two equal
// consecutive letters, type 2 replaces a substring w(s,t) by w(t,s).
struct ReductionStep {
  int type;  // 1 or 2
  int pos;
  int s = -1, t = -1;  // type 2: the alternating pair, before -> after
};

struct ReduceResult {
  Word word;
  std::vector<ReductionStep> trace;
  bool canonical = false;  // false means the orbit search hit the cap
};

namespace detail {

// Braid (type 2) successors of w, in deterministic scan order.
inline void for_each_braid_move(const Word& w, const CoxeterMatrix& m,
                                auto&& visit) {
  int n = static_cast<int>(w.size());
  for (int p = 0; p < n; ++p) {
    if (p + 1 >= n) break;
    int s = w[p], t = w[p + 1];
    if (s == t) continue;
    int len = m.at(s, t);
    if (len == kInfEntry || p + len > n) continue;
    bool ok = true;
    for (int i = 0; i < len; ++i)
      if (w[p + i] != (i % 2 == 0 ? s : t)) { ok = false; break; }
    if (!ok) continue;
    Word v = w;
    for (int i = 0; i < len; ++i) v[p + i] = (i % 2 == 0 ? t : s);
    visit(std::move(v), ReductionStep{2, p, s, t});
  }
}

inline int first_tt_site(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// Tits reduction with canonicalization. Repeatedly searches the braid orbit
// of the current word for a member with two equal consecutive letters,
// deletes them, and starts over; when the orbit closes with no deletion the
// word is reduced and the lexicographically least orbit member is returned
// as the canonical form. The trace records every elementary reduction along
// the chosen path. If the orbit search exceeds search_cap before closing,
// the current word is returned uncanonicalized (canonical = false).
inline ReduceResult reduce(const Word& input, const CoxeterMatrix& m,
                           size_t search_cap = 100000) {
  m.check_word(input);
  ReduceResult out;
  Word cur = input;
  while (true) {
    // BFS over the braid orbit with parent links for trace reconstruction.
    std::map<Word, std::pair<Word, ReductionStep>> parent;
    std::deque<Word> queue;
    std::set<Word> seen;
    seen.insert(cur);
    queue.push_back(cur);
    bool capped = false;
    Word found;
    int found_site = -1;
    while (!queue.empty()) {
      Word u = queue.front();
      queue.pop_front();
      int site = detail::first_tt_site(u);
      if (site >= 0) {
        found = u;
        found_site = site;
        break;
      }
      if (capped) continue;  // drain the queue checking for deletion sites only
      detail::for_each_braid_move(u, m, [&](Word v, ReductionStep step) {
        if (capped || seen.count(v)) return;
        if (seen.size() >= search_cap) { capped = true; return; }
        seen.insert(v);
        parent.emplace(v, std::make_pair(u, step));
        queue.push_back(std::move(v));
      });
    }
    auto path_to = [&](const Word& target) {
      std::vector<ReductionStep> steps;
      Word at = target;
      while (at != cur) {
        auto& pr = parent.at(at);
        steps.push_back(pr.second);
        at = pr.first;
      }
      std::reverse(steps.begin(), steps.end());
      return steps;
    };
    if (found_site >= 0) {
      for (auto& st : path_to(found)) out.trace.push_back(st);
      out.trace.push_back(ReductionStep{1, found_site, found[found_site], found[found_site]});
      found.erase(found.begin() + found_site, found.begin() + found_site + 2);
      cur = std::move(found);
      continue;
    }
    if (capped) {
      out.word = cur;
      out.canonical = false;
      return out;
    }
    // Orbit closed without a deletion: cur is reduced and `seen` holds all
    // of its reduced expressions (Tits). Canonical form = lex least.
    const Word& least = *seen.begin();
    for (auto& st : path_to(least)) out.trace.push_back(st);
    out.word = least;
    out.canonical = true;
    return out;
  }
}

// All reduced expressions of the element represented by a reduced word
// (its full braid orbit). Throws CAP_EXCEEDED when the orbit is larger than
// the cap.
inline std::set<Word> braid_orbit(const Word& reduced_word, const CoxeterMatrix& m,
                                  size_t cap = 100000) {
  std::set<Word> seen{reduced_word};
  std::deque<Word> queue{reduced_word};
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    detail::for_each_braid_move(u, m, [&](Word v, ReductionStep) {
      if (seen.count(v)) return;
      require(seen.size() < cap, Errc::CapExceeded, "braid orbit larger than cap");
      seen.insert(v);
      queue.push_back(std::move(v));
    });
  }
  return seen;
}

struct SignSupport {
  int sign;                            // (-1)^{l(w)}
  std::set<int> support;               // letters of any reduced form
  std::map<int, std::set<int>> commuting;  // t -> I(t) = {s in support : m(s,t)=2}
};

inline SignSupport sign_support(const Word& w, const CoxeterMatrix& m) {
  SignSupport r;
  r.sign = (w.size() % 2 == 0) ? 1 : -1;
  r.support = letter_set(reduce(w, m).word);
  for (int t = 0; t < m.size(); ++t) {
    std::set<int> it;
    for (int s : r.support)
      if (s != t && m.at(s, t) == 2) it.insert(s);
    r.commuting[t] = std::move(it);
  }
  return r;
}

// Equality of group elements through canonical forms. Only usable when both
// orbits fit under the cap; W(k) callers prefer the exact matrix oracle.
inline bool words_equal(const Word& a, const Word& b, const CoxeterMatrix& m,
                        size_t cap = 100000) {
  ReduceResult ra = reduce(a, m, cap), rb = reduce(b, m, cap);
  require(ra.canonical && rb.canonical, Errc::CapExceeded, "canonicalization cap exceeded");
  return ra.word == rb.word;
}

}  // namespace coxsys

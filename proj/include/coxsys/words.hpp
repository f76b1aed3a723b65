#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxsys/common.hpp"

namespace coxsys {

// A word over the generator alphabet, letters stored as 0-based indices.
// The wire format is comma-separated 1-based indices: "1,3,1,3".
using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << (w[i] + 1);
  return os.str();
}

inline Word word_from_string(const std::string& s) {
  Word w;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    require(v >= 1, Errc::Usage, "generator indices are 1-based");
    w.push_back(v - 1);
  }
  return w;
}

inline Word word_inverse(const Word& w) {
  // Generators are involutions, so the inverse word is the reverse.
  return Word(w.rbegin(), w.rend());
}

inline Word word_concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// A word modulo cyclic rotation, stored in its lexicographically least
// rotation. Move positions elsewhere in the library always refer to this
// canonical rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(Word letters) : w_(canonical_rotation(std::move(letters))) {}

  static Word canonical_rotation(Word v) {
    if (v.size() < 2) return v;
    size_t n = v.size();
    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
      for (size_t i = 0; i < n; ++i) {
        int a = v[(r + i) % n], b = v[(best + i) % n];
        if (a != b) {
          if (a < b) best = r;
          break;
        }
      }
    }
    std::rotate(v.begin(), v.begin() + static_cast<long>(best), v.end());
    return v;
  }

  const Word& letters() const { return w_; }
  size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  int at(size_t i) const { return w_[i % w_.size()]; }

  bool operator==(const CyclicWord& o) const { return w_ == o.w_; }
  bool operator!=(const CyclicWord& o) const { return !(*this == o); }

  std::string to_string() const { return word_to_string(w_); }

 private:
  Word w_;
};

inline std::set<int> letter_set(const Word& w) { return std::set<int>(w.begin(), w.end()); }

// Decides whether a word represents the identity of the ambient group.
using IdentityOracle = std::function<bool(const Word&)>;

}  // namespace coxsys

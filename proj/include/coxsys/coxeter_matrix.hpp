#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "coxsys/words.hpp"

namespace coxsys {

// Entry value standing for m(s,t) = infinity.
inline constexpr int kInfEntry = std::numeric_limits<int>::max();

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  CoxeterMatrix(int n, std::vector<int> entries) : n_(n), m_(std::move(entries)) { validate(); }

  static CoxeterMatrix dihedral_like(int n, int off_diagonal) {
    std::vector<int> e(static_cast<size_t>(n) * n, off_diagonal);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1;
    return CoxeterMatrix(n, std::move(e));
  }

  // The Coxeter matrix of W(k): six generators on Z/6Z with
  // m(i,i+-1)=2, m(i,i+-2)=k, m(i,i+3)=infinity.
  static CoxeterMatrix wk(int k) {
    require(k >= 2, Errc::MalformedMatrix, "W(k) needs k >= 2");
    std::vector<int> e(36, 1);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        if (i == j) continue;
        int d = (i - j + 6) % 6;
        if (d > 3) d = 6 - d;
        e[static_cast<size_t>(i) * 6 + j] = (d == 1) ? 2 : (d == 2) ? k : kInfEntry;
      }
    return CoxeterMatrix(6, std::move(e));
  }

  int size() const { return n_; }
  int at(int s, int t) const { return m_[static_cast<size_t>(s) * n_ + t]; }

  // Detects the W(k) pattern and returns k, enabling the exact matrix oracle.
  std::optional<int> wk_parameter() const {
    if (n_ != 6) return std::nullopt;
    int k = at(0, 2);
    if (k == kInfEntry || k < 2) return std::nullopt;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int d = (i - j + 6) % 6;
        if (d > 3) d = 6 - d;
        int want = (d == 0) ? 1 : (d == 1) ? 2 : (d == 2) ? k : kInfEntry;
        if (at(i, j) != want) return std::nullopt;
      }
    return k;
  }

  void check_word(const Word& w) const {
    for (int x : w)
      require(x >= 0 && x < n_, Errc::Usage,
              "letter " + std::to_string(x + 1) + " out of range for rank " + std::to_string(n_));
  }

 private:
  void validate() const {
    require(n_ >= 1 && m_.size() == static_cast<size_t>(n_) * n_, Errc::MalformedMatrix,
            "bad matrix dimensions");
    for (int i = 0; i < n_; ++i) {
      require(at(i, i) == 1, Errc::MalformedMatrix, "diagonal entries must be 1");
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        require(at(i, j) == at(j, i), Errc::MalformedMatrix, "matrix must be symmetric");
        require(at(i, j) == kInfEntry || at(i, j) >= 2, Errc::MalformedMatrix,
                "off-diagonal entries must be >= 2 or infinity");
      }
    }
  }

  int n_ = 0;
  std::vector<int> m_;
};

// gamma(W_I) = 2 * min over distinct s,t in I of m(s,t); infinity when no
// finite pair exists. (W_I, I) is itself a Coxeter system, so restricting to
// a subset is legitimate.
inline int girth(const CoxeterMatrix& m, const std::vector<int>& gens) {
  require(!gens.empty(), Errc::Usage, "generator subset must be nonempty");
  for (int g : gens)
    require(g >= 0 && g < m.size(), Errc::Usage, "generator out of range");
  long best = kInfEntry;
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b) {
      int v = m.at(gens[a], gens[b]);
      if (v < best) best = v;
    }
  if (best == kInfEntry) return kInfEntry;
  return static_cast<int>(2 * best);
}

inline int girth(const CoxeterMatrix& m) {
  std::vector<int> all(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) all[static_cast<size_t>(i)] = i;
  return girth(m, all);
}

// A two-block partition of the generators. Red/blue follows the surface
// convention: sides 1,3,5 red and 2,4,6 blue.
struct Partition {
  std::vector<int> red;
  std::vector<int> blue;

  static Partition standard_rb() { return {{0, 2, 4}, {1, 3, 5}}; }

  void validate(const CoxeterMatrix& m) const {
    std::vector<int> seen(static_cast<size_t>(m.size()), 0);
    for (int g : red) {
      require(g >= 0 && g < m.size(), Errc::Usage, "red generator out of range");
      seen[static_cast<size_t>(g)]++;
    }
    for (int g : blue) {
      require(g >= 0 && g < m.size(), Errc::Usage, "blue generator out of range");
      seen[static_cast<size_t>(g)]++;
    }
    for (int c : seen)
      require(c == 1, Errc::Usage, "partition must cover each generator exactly once");
  }

  bool is_red(int g) const {
    return std::find(red.begin(), red.end(), g) != red.end();
  }
};

struct PartitionReport {
  bool right_angled = false;
  bool gal = false;
  int red_girth = kInfEntry;
  int blue_girth = kInfEntry;
  std::string note;
};

inline PartitionReport check_partition(const CoxeterMatrix& m, const Partition& p) {
  p.validate(m);
  PartitionReport r;
  r.right_angled = true;
  r.gal = true;
  for (int s : p.red)
    for (int t : p.blue) {
      int v = m.at(s, t);
      if (v != kInfEntry) {
        if (v != 2) r.right_angled = false;
        if (v % 2 != 0) r.gal = false;
      }
    }
  r.red_girth = p.red.empty() ? kInfEntry : girth(m, p.red);
  r.blue_girth = p.blue.empty() ? kInfEntry : girth(m, p.blue);
  if (auto k = m.wk_parameter(); k && *k % 2 != 0 && r.right_angled)
    r.note = "W(" + std::to_string(*k) + ") with odd k: the partition is still right-angled "
             "(cross entries depend only on index parity)";
  return r;
}

}  // namespace coxsys

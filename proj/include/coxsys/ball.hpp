#pragma once

#include <fstream>
#include <unordered_map>

#include "coxsys/reduce.hpp"
#include "coxsys/tits.hpp"

namespace coxsys {

// The ball B_n = {w in W(k) : l(w) <= n}, enumerated breadth-first under
// right multiplication by the six generators and deduplicated by the exact
// Tits matrix. BFS depth equals Bruhat length because the generators are
// involutions.
struct Ball {
  int k = 0;
  int radius = 0;
  struct Elem {
    Word witness;  // a minimal-length word reaching the element
    int depth = 0;
    Mat6 matrix;
  };
  std::vector<Elem> elems;                        // BFS order, elems[0] = identity
  std::unordered_map<std::string, size_t> index;  // matrix key -> element id
  std::vector<size_t> size_by_radius;             // |B_0|, |B_1|, ..., |B_radius|

  size_t size() const { return elems.size(); }
};

inline Ball ball_enumerate(const TitsContext& t, int radius, size_t element_cap = 10000000) {
  require(radius >= 0, Errc::Usage, "radius must be >= 0");
  Ball b;
  b.k = t.k();
  b.radius = radius;
  Mat6 id = Mat6::identity(t.field());
  b.index.emplace(id.key(), 0);
  b.elems.push_back({Word{}, 0, std::move(id)});
  size_t frontier_begin = 0;
  b.size_by_radius.push_back(1);
  for (int d = 1; d <= radius; ++d) {
    size_t frontier_end = b.elems.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (int g = 0; g < 6; ++g) {
        Mat6 nm = b.elems[i].matrix * t.reflection(g);
        std::string key = nm.key();
        if (b.index.count(key)) continue;
        require(b.elems.size() < element_cap, Errc::CapExceeded,
                "ball enumeration exceeded the element cap");
        Word w = b.elems[i].witness;
        w.push_back(g);
        b.index.emplace(std::move(key), b.elems.size());
        b.elems.push_back({std::move(w), d, std::move(nm)});
      }
    }
    frontier_begin = frontier_end;
    b.size_by_radius.push_back(b.elems.size());
  }
  return b;
}

// Independent oracle for ball sizes: enumerate every word of length <= radius
// and count distinct canonical reduced forms per minimal length. Pure word
// combinatorics; no matrices involved.
inline std::vector<size_t> ball_sizes_word_oracle(const CoxeterMatrix& m, int radius,
                                                  size_t cap = 1000000) {
  std::map<Word, int> min_len;  // canonical form -> minimal word length seen
  std::vector<Word> frontier{Word{}};
  min_len[Word{}] = 0;
  for (int len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int g = 0; g < m.size(); ++g) {
        Word v = w;
        v.push_back(g);
        ReduceResult r = reduce(v, m, cap);
        require(r.canonical, Errc::CapExceeded, "oracle canonicalization cap exceeded");
        auto it = min_len.find(r.word);
        if (it == min_len.end()) min_len.emplace(r.word, len);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<size_t> sizes(static_cast<size_t>(radius) + 1, 0);
  for (const auto& [w, len] : min_len)
    for (int d = len; d <= radius; ++d) sizes[static_cast<size_t>(d)]++;
  return sizes;
}

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline void ball_save(const Ball& b, const std::string& path) {
  std::ofstream os(path);
  require(static_cast<bool>(os), Errc::IoError, "cannot write " + path);
  os << "coxsys-ball-v1 k=" << b.k << " radius=" << b.radius << " count=" << b.size() << "\n";
  for (const auto& e : b.elems)
    os << e.depth << " " << (e.witness.empty() ? "-" : word_to_string(e.witness)) << " "
       << fnv1a(e.matrix.key()) << "\n";
  require(static_cast<bool>(os), Errc::IoError, "write failed for " + path);
}

// Rebuilds a ball from cached witness words, verifying the stored matrix
// hashes; returns nothing if the header does not match or the file is stale.
inline std::optional<Ball> ball_load(const TitsContext& t, int radius, const std::string& path) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  std::string magic;
  int k = 0, r = 0;
  size_t count = 0;
  std::string kv;
  is >> magic;
  if (magic != "coxsys-ball-v1") return std::nullopt;
  is >> kv;
  if (sscanf(kv.c_str(), "k=%d", &k) != 1) return std::nullopt;
  is >> kv;
  if (sscanf(kv.c_str(), "radius=%d", &r) != 1) return std::nullopt;
  is >> kv;
  if (sscanf(kv.c_str(), "count=%zu", &count) != 1) return std::nullopt;
  if (k != t.k() || r != radius) return std::nullopt;
  Ball b;
  b.k = k;
  b.radius = radius;
  b.size_by_radius.assign(static_cast<size_t>(radius) + 1, 0);
  for (size_t i = 0; i < count; ++i) {
    int depth;
    std::string wstr;
    uint64_t hash;
    if (!(is >> depth >> wstr >> hash)) return std::nullopt;
    Ball::Elem e;
    e.witness = wstr == "-" ? Word{} : word_from_string(wstr);
    e.depth = depth;
    e.matrix = t.rho(e.witness);
    if (fnv1a(e.matrix.key()) != hash) return std::nullopt;
    b.index.emplace(e.matrix.key(), b.elems.size());
    b.elems.push_back(std::move(e));
  }
  for (const auto& e : b.elems)
    for (int d = e.depth; d <= radius; ++d) b.size_by_radius[static_cast<size_t>(d)]++;
  return b;
}

}  // namespace coxsys

#pragma once

#include <random>
#include <unordered_map>

#include "coxsys/mod_matrix.hpp"

namespace coxsys {

// Group elements acting on a finite point set. An Action type provides:
//   using Elt = ...;
//   Elt identity() const;
//   Elt compose(const Elt&, const Elt&) const;   // act(compose(a,b),p) = act(a, act(b,p))
//   Elt inverse(const Elt&) const;
//   bool is_identity(const Elt&) const;
//   uint64_t act(const Elt&, uint64_t p) const;
//   uint64_t num_points() const;
//   std::string key(const Elt&) const;

struct PermAction {
  using Elt = std::vector<int>;  // images, 0-based
  size_t n;

  Elt identity() const {
    Elt e(n);
    for (size_t i = 0; i < n; ++i) e[i] = static_cast<int>(i);
    return e;
  }
  Elt compose(const Elt& a, const Elt& b) const {
    Elt r(n);
    for (size_t i = 0; i < n; ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
  }
  Elt inverse(const Elt& a) const {
    Elt r(n);
    for (size_t i = 0; i < n; ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return r;
  }
  bool is_identity(const Elt& a) const {
    for (size_t i = 0; i < n; ++i)
      if (a[i] != static_cast<int>(i)) return false;
    return true;
  }
  uint64_t act(const Elt& a, uint64_t p) const { return static_cast<uint64_t>(a[p]); }
  uint64_t num_points() const { return n; }
  uint64_t moved_point(const Elt& a) const {
    for (size_t i = 0; i < n; ++i)
      if (a[i] != static_cast<int>(i)) return i;
    fail(Errc::Internal, "identity has no moved point");
  }
  std::string key(const Elt& a) const {
    std::string s;
    for (int x : a) {
      s += std::to_string(x);
      s += ',';
    }
    return s;
  }
};

// Matrices over (Z/M)[x]/psi acting on the natural module (ring)^6. Elements
// carry their inverses so that no division in the ring is ever needed; the
// generators handed in are involutions, and products maintain the pair.
struct MatAction {
  struct Elt {
    ModMat g, gi;
  };
  std::shared_ptr<const ModContext> ctx;
  uint64_t ring_size = 0;  // = M^deg, must keep ring_size^6 < 2^62

  explicit MatAction(std::shared_ptr<const ModContext> c) : ctx(std::move(c)) {
    Int rs = ctx->ring_size();
    require(rs <= 1625, Errc::UnsupportedModulus,
            "natural module too large for 64-bit point codes");
    ring_size = rs.convert_to<uint64_t>();
  }

  Elt identity() const {
    ModMat i = ModMat::identity(ctx);
    return {i, i};
  }
  Elt compose(const Elt& a, const Elt& b) const { return {a.g * b.g, b.gi * a.gi}; }
  Elt inverse(const Elt& a) const { return {a.gi, a.g}; }
  bool is_identity(const Elt& a) const { return a.g.is_identity(); }

  uint64_t act(const Elt& a, uint64_t p) const {
    // decode six ring coordinates
    std::array<std::vector<Int>, 6> v;
    uint64_t q = p;
    int deg = ctx->deg();
    uint64_t mod = ctx->modulus().convert_to<uint64_t>();
    for (int i = 0; i < 6; ++i) {
      uint64_t code = q % ring_size;
      q /= ring_size;
      std::vector<Int> coord(static_cast<size_t>(deg), Int(0));
      for (int j = 0; j < deg; ++j) {
        coord[static_cast<size_t>(j)] = Int(code % mod);
        code /= mod;
      }
      v[static_cast<size_t>(i)] = std::move(coord);
    }
    uint64_t out = 0, mult = 1;
    for (int i = 0; i < 6; ++i) {
      std::vector<Int> acc(static_cast<size_t>(deg), Int(0));
      for (int j = 0; j < 6; ++j) {
        std::vector<Int> t = ctx->mul_entry(a.g.at(i, j), v[static_cast<size_t>(j)]);
        for (int d = 0; d < deg; ++d) {
          Int s = acc[static_cast<size_t>(d)] + t[static_cast<size_t>(d)];
          s %= ctx->modulus();
          acc[static_cast<size_t>(d)] = s;
        }
      }
      uint64_t code = 0, cm = 1;
      for (int d = 0; d < deg; ++d) {
        code += acc[static_cast<size_t>(d)].convert_to<uint64_t>() * cm;
        cm *= mod;
      }
      out += code * mult;
      mult *= ring_size;
    }
    return out;
  }
  uint64_t num_points() const {
    uint64_t r = 1;
    for (int i = 0; i < 6; ++i) r *= ring_size;
    return r;
  }
  // A non-identity matrix moves one of the six basis vectors of the module.
  uint64_t moved_point(const Elt& a) const {
    ModMat id = ModMat::identity(ctx);
    for (int j = 0; j < 6; ++j) {
      for (int i = 0; i < 6; ++i) {
        if (a.g.at(i, j) != id.at(i, j)) {
          uint64_t mult = 1;
          for (int s = 0; s < j; ++s) mult *= ring_size;
          return mult;  // code of the basis vector e_j
        }
      }
    }
    fail(Errc::Internal, "identity has no moved point");
  }
  std::string key(const Elt& a) const { return a.g.key(); }
};

// Stabilizer chain with a randomized warm start followed by a full
// deterministic Schreier verification, so the reported order is exact and
// independent of the seed.
template <class Action>
class StabilizerChain {
 public:
  using Elt = typename Action::Elt;

  StabilizerChain(Action action, std::vector<Elt> generators, uint64_t seed)
      : a_(std::move(action)), gens_(std::move(generators)) {
    require(!gens_.empty(), Errc::Usage, "need at least one generator");
    for (const Elt& g : gens_) add_generator(g);
    warm_start(seed);
    verify();
  }

  Int order() const {
    Int o = 1;
    for (const auto& l : levels_) o *= Int(l.transversal.size());
    return o;
  }

  std::vector<size_t> orbit_sizes() const {
    std::vector<size_t> r;
    for (const auto& l : levels_) r.push_back(l.transversal.size());
    return r;
  }

  bool is_member(const Elt& g) const {
    Elt res = g;
    size_t lvl;
    return sift(res, 0, lvl);
  }

  // 100-style sanity counter: how many random generator products sift to the
  // identity (all of them must).
  int membership_sanity(int trials, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    int pass = 0;
    for (int t = 0; t < trials; ++t) {
      Elt g = a_.identity();
      int len = 5 + static_cast<int>(rng() % 25);
      for (int i = 0; i < len; ++i) g = a_.compose(g, gens_[rng() % gens_.size()]);
      if (is_member(g)) pass++;
    }
    return pass;
  }

  // Full closure enumeration; usable as an independent order oracle for
  // small groups.
  std::optional<Int> closure_order(size_t cap) const {
    std::unordered_map<std::string, size_t> seen;
    std::vector<Elt> elems{a_.identity()};
    seen.emplace(a_.key(elems[0]), 0);
    for (size_t i = 0; i < elems.size(); ++i) {
      for (const Elt& g : gens_) {
        Elt n = a_.compose(elems[i], g);
        std::string k = a_.key(n);
        if (seen.count(k)) continue;
        if (elems.size() >= cap) return std::nullopt;
        seen.emplace(std::move(k), elems.size());
        elems.push_back(std::move(n));
      }
    }
    return Int(elems.size());
  }

 private:
  struct Level {
    uint64_t beta;
    std::unordered_map<uint64_t, Elt> transversal;  // point -> rep with act(rep, beta) = point
    std::vector<Elt> strong_gens;
    std::unordered_map<std::string, bool> gen_keys;
  };

  void recompute_orbit(size_t lvl) {
    Level& L = levels_[lvl];
    L.transversal.clear();
    L.transversal.emplace(L.beta, a_.identity());
    std::vector<uint64_t> frontier{L.beta};
    while (!frontier.empty()) {
      std::vector<uint64_t> next;
      for (uint64_t p : frontier) {
        for (const Elt& g : L.strong_gens) {
          uint64_t q = a_.act(g, p);
          if (L.transversal.count(q)) continue;
          L.transversal.emplace(q, a_.compose(g, L.transversal.at(p)));
          next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
  }

  // Sifts g through levels >= from; returns true when the residue is the
  // identity, otherwise leaves the residue in g and the drop level in lvl.
  bool sift(Elt& g, size_t from, size_t& lvl) const {
    for (size_t l = from; l < levels_.size(); ++l) {
      uint64_t p = a_.act(g, levels_[l].beta);
      auto it = levels_[l].transversal.find(p);
      if (it == levels_[l].transversal.end()) {
        lvl = l;
        return false;
      }
      g = a_.compose(a_.inverse(it->second), g);
    }
    lvl = levels_.size();
    return a_.is_identity(g);
  }

  void extend_base(const Elt& g) {
    uint64_t p = a_.moved_point(g);
    require(a_.act(g, p) != p, Errc::Internal, "moved_point returned a fixed point");
    levels_.push_back(Level{p, {}, {}, {}});
  }

  // Adds g (and recursively its sift residues) as a strong generator.
  void add_generator(const Elt& g0) {
    Elt g = g0;
    size_t lvl;
    if (sift(g, 0, lvl)) return;
    if (lvl == levels_.size()) extend_base(g);
    std::string k = a_.key(g);
    for (size_t i = 0; i <= lvl && i < levels_.size(); ++i) {
      Level& L = levels_[i];
      if (!L.gen_keys.count(k)) {
        L.strong_gens.push_back(g);
        L.gen_keys.emplace(k, true);
        recompute_orbit(i);
      }
    }
  }

  void warm_start(uint64_t seed) {
    std::mt19937_64 rng(seed);
    int quiet = 0;
    for (int round = 0; round < 200 && quiet < 20; ++round) {
      Elt g = a_.identity();
      int len = 5 + static_cast<int>(rng() % 20);
      for (int i = 0; i < len; ++i) g = a_.compose(g, gens_[rng() % gens_.size()]);
      Elt res = g;
      size_t lvl;
      if (sift(res, 0, lvl)) {
        quiet++;
      } else {
        quiet = 0;
        if (lvl == levels_.size()) extend_base(res);
        add_strong(res, lvl);
      }
    }
  }

  void add_strong(const Elt& g, size_t lvl) {
    std::string k = a_.key(g);
    for (size_t i = 0; i <= lvl && i < levels_.size(); ++i) {
      Level& L = levels_[i];
      if (!L.gen_keys.count(k)) {
        L.strong_gens.push_back(g);
        L.gen_keys.emplace(k, true);
        recompute_orbit(i);
      }
    }
  }

  // Deterministic completion: every Schreier generator of every level must
  // sift to the identity through the rest of the chain.
  void verify() {
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t l = levels_.size(); l-- > 0 && clean;) {
        Level& L = levels_[l];
        std::vector<uint64_t> pts;
        pts.reserve(L.transversal.size());
        for (const auto& [p, rep] : L.transversal) pts.push_back(p);
        std::sort(pts.begin(), pts.end());
        for (uint64_t p : pts) {
          for (size_t gi = 0; gi < L.strong_gens.size(); ++gi) {
            const Elt& g = L.strong_gens[gi];
            uint64_t q = a_.act(g, p);
            Elt sch = a_.compose(a_.inverse(L.transversal.at(q)),
                                 a_.compose(g, L.transversal.at(p)));
            Elt res = sch;
            size_t lvl;
            if (sift(res, l + 1, lvl)) continue;
            if (lvl == levels_.size()) extend_base(res);
            add_strong(res, lvl);
            clean = false;
            break;
          }
          if (!clean) break;
        }
      }
    }
  }

  Action a_;
  std::vector<Elt> gens_;
  std::vector<Level> levels_;
};

}  // namespace coxsys

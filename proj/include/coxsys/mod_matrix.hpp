#pragma once

#include <memory>

#include "coxsys/tits.hpp"

namespace coxsys {

// Arithmetic context for 6x6 matrices over (Z/M)[x]/psi.
class ModContext {
 public:
  ModContext(Int modulus, Poly psi)
      : m_(std::move(modulus)), psi_(std::move(psi)), deg_(poly_deg(psi_)) {
    require(m_ >= 2, Errc::UnsupportedModulus, "modulus must be >= 2");
    require(deg_ >= 1 && psi_.back() == 1, Errc::Internal, "psi must be monic of degree >= 1");
  }

  const Int& modulus() const { return m_; }
  const Poly& psi() const { return psi_; }
  int deg() const { return deg_; }

  // Number of ring elements; guarded so points of the natural module fit a
  // 64-bit code.
  Int ring_size() const { return pow_int(m_, static_cast<unsigned>(deg_)); }

  std::vector<Int> reduce_entry(const Poly& p) const {
    Poly q = poly_deg(p) >= deg_ ? poly_mod_monic(p, psi_) : p;
    std::vector<Int> r(static_cast<size_t>(deg_), Int(0));
    for (size_t i = 0; i < q.size(); ++i) {
      Int v = q[i] % m_;
      if (v < 0) v += m_;
      r[i] = v;
    }
    return r;
  }

  std::vector<Int> mul_entry(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Poly p(static_cast<size_t>(2 * deg_ - 1), Int(0));
    for (int i = 0; i < deg_; ++i) {
      if (a[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < deg_; ++j)
        p[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return reduce_entry(p);
  }

 private:
  Int m_;
  Poly psi_;
  int deg_;
};

// 6x6 matrix over (Z/M)[x]/psi; entries stored as deg coefficients each.
class ModMat {
 public:
  ModMat() = default;
  explicit ModMat(std::shared_ptr<const ModContext> ctx)
      : ctx_(std::move(ctx)), e_(36, std::vector<Int>(static_cast<size_t>(ctx_->deg()), Int(0))) {}

  static ModMat identity(std::shared_ptr<const ModContext> ctx) {
    ModMat m(ctx);
    for (int i = 0; i < 6; ++i) m.at(i, i)[0] = 1;
    return m;
  }

  static ModMat from_exact(std::shared_ptr<const ModContext> ctx, const Mat6& a) {
    ModMat m(ctx);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m.at(i, j) = ctx->reduce_entry(a.at(i, j).coeffs());
    return m;
  }

  const std::shared_ptr<const ModContext>& ctx() const { return ctx_; }
  std::vector<Int>& at(int r, int c) { return e_[static_cast<size_t>(r) * 6 + c]; }
  const std::vector<Int>& at(int r, int c) const { return e_[static_cast<size_t>(r) * 6 + c]; }

  ModMat operator*(const ModMat& o) const {
    ModMat r(ctx_);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Poly acc(static_cast<size_t>(2 * ctx_->deg() - 1), Int(0));
        for (int l = 0; l < 6; ++l) {
          const auto& a = at(i, l);
          const auto& b = o.at(l, j);
          for (int x = 0; x < ctx_->deg(); ++x) {
            if (a[static_cast<size_t>(x)] == 0) continue;
            for (int y = 0; y < ctx_->deg(); ++y)
              acc[static_cast<size_t>(x + y)] += a[static_cast<size_t>(x)] * b[static_cast<size_t>(y)];
          }
        }
        r.at(i, j) = ctx_->reduce_entry(acc);
      }
    return r;
  }

  bool operator==(const ModMat& o) const { return e_ == o.e_; }
  bool is_identity() const { return *this == identity(ctx_); }

  // Determinant by Laplace expansion; exact in the quotient ring.
  std::vector<Int> det() const {
    std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
    std::vector<Int> acc(static_cast<size_t>(ctx_->deg()), Int(0));
    do {
      int sgn = 1;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sgn = -sgn;
      std::vector<Int> term(static_cast<size_t>(ctx_->deg()), Int(0));
      term[0] = 1;
      for (int i = 0; i < 6; ++i) term = ctx_->mul_entry(term, at(i, perm[static_cast<size_t>(i)]));
      for (int d = 0; d < ctx_->deg(); ++d) {
        Int v = acc[static_cast<size_t>(d)] + (sgn > 0 ? term[static_cast<size_t>(d)] : -term[static_cast<size_t>(d)]);
        v %= ctx_->modulus();
        if (v < 0) v += ctx_->modulus();
        acc[static_cast<size_t>(d)] = v;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
  }

  std::string key() const {
    std::string s;
    for (const auto& entry : e_) {
      for (const auto& c : entry) {
        s += c.str();
        s += ',';
      }
      s += ';';
    }
    return s;
  }

 private:
  std::shared_ptr<const ModContext> ctx_;
  std::vector<std::vector<Int>> e_;
};

}  // namespace coxsys

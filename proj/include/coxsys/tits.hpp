#pragma once

#include <array>
#include <optional>

#include "coxsys/algebraic_int.hpp"
#include "coxsys/words.hpp"

namespace coxsys {

// 6x6 matrix over O. Rows * columns, acting on column vectors.
class Mat6 {
 public:
  Mat6() = default;
  explicit Mat6(std::shared_ptr<const FieldContext> ctx) : ctx_(std::move(ctx)) {
    e_.fill(AlgebraicInt::zero(ctx_));
  }

  static Mat6 identity(std::shared_ptr<const FieldContext> ctx) {
    Mat6 m(ctx);
    for (int i = 0; i < 6; ++i) m.at(i, i) = AlgebraicInt::from_int(ctx, 1);
    return m;
  }

  const std::shared_ptr<const FieldContext>& ctx() const { return ctx_; }
  AlgebraicInt& at(int r, int c) { return e_[static_cast<size_t>(r) * 6 + c]; }
  const AlgebraicInt& at(int r, int c) const { return e_[static_cast<size_t>(r) * 6 + c]; }

  Mat6 operator*(const Mat6& o) const {
    Mat6 r(ctx_);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        AlgebraicInt acc = AlgebraicInt::zero(ctx_);
        for (int l = 0; l < 6; ++l) acc += at(i, l) * o.at(l, j);
        r.at(i, j) = std::move(acc);
      }
    return r;
  }

  Mat6 operator-(const Mat6& o) const {
    Mat6 r(ctx_);
    for (int i = 0; i < 36; ++i) r.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)] - o.e_[static_cast<size_t>(i)];
    return r;
  }

  Mat6 transpose() const {
    Mat6 r(ctx_);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  bool operator==(const Mat6& o) const { return e_ == o.e_; }
  bool operator!=(const Mat6& o) const { return !(*this == o); }

  bool is_identity() const {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        if (i == j ? !at(i, j).is_int(1) : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  std::string key() const {
    std::string s;
    for (const auto& x : e_) {
      s += x.to_string();
      s += ';';
    }
    return s;
  }

 private:
  std::shared_ptr<const FieldContext> ctx_;
  std::array<AlgebraicInt, 36> e_;
};

// Fraction-free (Bareiss) determinant over O; divisions are exact in an
// integral domain.
inline AlgebraicInt det_bareiss(std::vector<std::vector<AlgebraicInt>> a,
                                std::shared_ptr<const FieldContext> ctx) {
  size_t n = a.size();
  if (n == 0) return AlgebraicInt::from_int(ctx, 1);
  AlgebraicInt prev = AlgebraicInt::from_int(ctx, 1);
  int sign = 1;
  for (size_t col = 0; col + 1 < n; ++col) {
    if (a[col][col].is_zero()) {
      size_t piv = col;
      for (size_t r = col + 1; r < n; ++r)
        if (!a[r][col].is_zero()) { piv = r; break; }
      if (a[piv][col].is_zero()) return AlgebraicInt::zero(ctx);
      std::swap(a[col], a[piv]);
      sign = -sign;
    }
    ScaledInverse si = scaled_inverse(prev);
    for (size_t r = col + 1; r < n; ++r) {
      for (size_t c = col + 1; c < n; ++c)
        a[r][c] = div_exact(a[col][col] * a[r][c] - a[r][col] * a[col][c], prev, &si);
      a[r][col] = AlgebraicInt::zero(ctx);
    }
    prev = a[col][col];
  }
  AlgebraicInt d = a[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

inline AlgebraicInt det(const Mat6& m) {
  std::vector<std::vector<AlgebraicInt>> a(6, std::vector<AlgebraicInt>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
  return det_bareiss(std::move(a), m.ctx());
}

// Shared exact data for one W(k): the Gram form, its adjugate and
// determinant, and the six reflection matrices.
class TitsContext {
 public:
  explicit TitsContext(int k) : field_(make_context(k)), gram_(field_), adj_(field_) {
    const AlgebraicInt c = AlgebraicInt::gen(field_);
    const AlgebraicInt two = AlgebraicInt::from_int(field_, 2);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int d = (i - j + 6) % 6;
        if (d > 3) d = 6 - d;
        gram_.at(i, j) = (d == 0) ? two : (d == 1) ? AlgebraicInt::zero(field_)
                                  : (d == 2) ? -c : -two;
      }
    det_ = det(gram_);
    require(!det_.is_zero(), Errc::Internal, "Gram form must be nondegenerate for k >= 3");
    // adjugate: adj[i][j] = (-1)^{i+j} * minor(j, i)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::vector<std::vector<AlgebraicInt>> minor;
        for (int r = 0; r < 6; ++r) {
          if (r == j) continue;
          std::vector<AlgebraicInt> row;
          for (int cidx = 0; cidx < 6; ++cidx) {
            if (cidx == i) continue;
            row.push_back(gram_.at(r, cidx));
          }
          minor.push_back(std::move(row));
        }
        AlgebraicInt m = det_bareiss(std::move(minor), field_);
        adj_.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
      }
    det_inv_ = scaled_inverse(det_);
    for (int i = 0; i < 6; ++i) {
      Mat6 s = Mat6::identity(field_);
      for (int b = 0; b < 6; ++b) s.at(i, b) -= gram_.at(i, b);
      refl_[static_cast<size_t>(i)] = std::move(s);
    }
  }

  int k() const { return field_->k(); }
  const std::shared_ptr<const FieldContext>& field() const { return field_; }
  const Mat6& gram() const { return gram_; }
  const AlgebraicInt& gram_det() const { return det_; }
  const Mat6& gram_adjugate() const { return adj_; }
  const Mat6& reflection(int i) const { return refl_[static_cast<size_t>(i)]; }

  Mat6 rho(const Word& w) const {
    Mat6 r = Mat6::identity(field_);
    for (int x : w) {
      require(x >= 0 && x < 6, Errc::Usage, "W(k) words use letters 1..6");
      r = r * refl_[static_cast<size_t>(x)];
    }
    return r;
  }

  bool is_identity_word(const Word& w) const { return rho(w).is_identity(); }

  IdentityOracle identity_oracle() const {
    return [this](const Word& w) { return is_identity_word(w); };
  }

  // E-basis coordinates of A = sum a_{i,j} E_{i,j}, i.e. the unique a with
  // A = a * gram; exact because the Gram form is nondegenerate.
  Mat6 e_coordinates(const Mat6& a) const {
    Mat6 t = a * adj_;
    Mat6 r(field_);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r.at(i, j) = div_exact(t.at(i, j), det_, &det_inv_);
    return r;
  }

  // max over E-coordinates of the l_infinity norm, compared against 3^e.
  bool coord_norm_less_than(const Mat6& coords, const Int& bound) const {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (!norm_less_than(coords.at(i, j), bound)) return false;
    return true;
  }

  std::optional<long> element_order(const Word& w, long cap) const {
    require(cap >= 1, Errc::Usage, "order cap must be >= 1");
    Mat6 g = rho(w);
    Mat6 p = g;
    for (long n = 1; n <= cap; ++n) {
      if (p.is_identity()) return n;
      p = p * g;
    }
    return std::nullopt;
  }

 private:
  std::shared_ptr<const FieldContext> field_;
  Mat6 gram_;
  Mat6 adj_;
  AlgebraicInt det_;
  ScaledInverse det_inv_;
  std::array<Mat6, 6> refl_;
};

// The circulant-eigenvalue route to det B: the eigenvalues of the circulant
// Gram matrix are 2 - 2(-1)^j - 2c cos(2 pi j / 3), j = 0..5, which are the
// O-elements -2c, 4+c, c, 4-2c, c, 4+c; their product reduces to
// -4c^3 (2-c) (4+c)^2.
inline AlgebraicInt gram_det_eigen_oracle(const std::shared_ptr<const FieldContext>& ctx) {
  const AlgebraicInt c = AlgebraicInt::gen(ctx);
  auto n = [&](long v) { return AlgebraicInt::from_int(ctx, v); };
  std::array<AlgebraicInt, 6> lambda = {-(n(2) * c), n(4) + c, c, n(4) - n(2) * c, c, n(4) + c};
  AlgebraicInt prod = n(1);
  for (const auto& l : lambda) prod *= l;
  return prod;
}

inline AlgebraicInt gram_det_closed_form(const std::shared_ptr<const FieldContext>& ctx) {
  const AlgebraicInt c = AlgebraicInt::gen(ctx);
  auto n = [&](long v) { return AlgebraicInt::from_int(ctx, v); };
  AlgebraicInt f = n(4) + c;
  return -(n(4) * c * c * c) * (n(2) - c) * f * f;
}

struct RelationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Exact check of the 18 defining relations of W(k) in the representation.
inline RelationReport verify_relations(const TitsContext& t) {
  RelationReport rep;
  int k = t.k();
  auto check = [&](const Word& w, const std::string& name) {
    if (!t.rho(w).is_identity()) {
      rep.ok = false;
      rep.failures.push_back(name);
    }
  };
  for (int i = 0; i < 6; ++i) {
    check({i, i}, "s" + std::to_string(i + 1) + "^2");
    int a = i, b = (i + 1) % 6;
    check({a, b, a, b}, "(s" + std::to_string(a + 1) + " s" + std::to_string(b + 1) + ")^2");
    int c2 = (i + 2) % 6;
    Word w;
    for (int r = 0; r < k; ++r) {
      w.push_back(a);
      w.push_back(c2);
    }
    check(w, "(s" + std::to_string(a + 1) + " s" + std::to_string(c2 + 1) + ")^" + std::to_string(k));
  }
  return rep;
}

}  // namespace coxsys

#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "coxsys/field_context.hpp"

namespace coxsys {

// Element of O = Z[2cos(pi/k)], stored as integer coordinates in the power
// basis 1, c, c^2, ... reduced mod psi.
class AlgebraicInt {
 public:
  AlgebraicInt() = default;
  AlgebraicInt(std::shared_ptr<const FieldContext> ctx, Poly coeffs)
      : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    reduce();
  }

  static AlgebraicInt zero(std::shared_ptr<const FieldContext> ctx) {
    return AlgebraicInt(std::move(ctx), {});
  }
  static AlgebraicInt from_int(std::shared_ptr<const FieldContext> ctx, Int n) {
    return AlgebraicInt(std::move(ctx), {std::move(n)});
  }
  // The generator c = 2cos(pi/k).
  static AlgebraicInt gen(std::shared_ptr<const FieldContext> ctx) {
    return AlgebraicInt(std::move(ctx), {Int(0), Int(1)});
  }

  const std::shared_ptr<const FieldContext>& ctx() const { return ctx_; }
  const Poly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  bool operator==(const AlgebraicInt& o) const { return c_ == o.c_; }
  bool operator!=(const AlgebraicInt& o) const { return !(*this == o); }

  AlgebraicInt operator+(const AlgebraicInt& o) const {
    check(o);
    return AlgebraicInt(ctx_, poly_add(c_, o.c_));
  }
  AlgebraicInt operator-(const AlgebraicInt& o) const {
    check(o);
    return AlgebraicInt(ctx_, poly_sub(c_, o.c_));
  }
  AlgebraicInt operator*(const AlgebraicInt& o) const {
    check(o);
    return AlgebraicInt(ctx_, poly_mul(c_, o.c_));
  }
  AlgebraicInt operator-() const { return AlgebraicInt(ctx_, poly_scale(c_, Int(-1))); }

  AlgebraicInt& operator+=(const AlgebraicInt& o) { return *this = *this + o; }
  AlgebraicInt& operator-=(const AlgebraicInt& o) { return *this = *this - o; }
  AlgebraicInt& operator*=(const AlgebraicInt& o) { return *this = *this * o; }

  bool is_int(const Int& n) const {
    if (n == 0) return c_.empty();
    return c_.size() == 1 && c_[0] == n;
  }

  // Coefficientwise residues in [0, M). Zero vector iff M divides x in O
  // (valid because psi is monic, so O is a free Z-module on the power basis).
  std::vector<Int> mod_reduce(const Int& m) const {
    require(m >= 2, Errc::UnsupportedModulus, "modulus must be >= 2");
    std::vector<Int> r(static_cast<size_t>(ctx_->degree()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      Int v = c_[i] % m;
      if (v < 0) v += m;
      r[i] = v;
    }
    return r;
  }

  bool divisible_by(const Int& m) const {
    for (const Int& x : c_)
      if (x % m != 0) return false;
    return true;
  }

  // Field norm N_{K/Q}(x) = product of all embeddings, as an exact integer
  // (resultant of psi with the coordinate polynomial, psi monic).
  Int field_norm() const {
    if (c_.empty()) return 0;
    return resultant(ctx_->psi(), c_);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
  }

  // Exact enclosure of the embedding value x_v; width shrinks with prec.
  DInterval embed(size_t v, long prec) const {
    return poly_eval_interval(c_, ctx_->embedding(v, prec));
  }

 private:
  void check(const AlgebraicInt& o) const {
    require(ctx_ == o.ctx_ || (ctx_ && o.ctx_ && ctx_->k() == o.ctx_->k()), Errc::ContextMismatch,
            "operands from different field contexts");
  }
  void reduce() {
    poly_trim(c_);
    if (poly_deg(c_) >= ctx_->degree()) c_ = poly_mod_monic(std::move(c_), ctx_->psi());
  }

  std::shared_ptr<const FieldContext> ctx_;
  Poly c_;
};

// --- l_infinity norm machinery -------------------------------------------
//
// ||x|| = max over embeddings v of |x_v|. Comparisons against integers are
// decided from exact dyadic enclosures, doubling precision until decisive.
// x_v = t can only happen when x = t in O (embeddings are injective field
// maps), so after that symbolic check the bisection always terminates.

struct NormEnclosure {
  double lo = 0, hi = 0;
};

inline NormEnclosure linf_enclosure(const AlgebraicInt& x, double rel_tol = 1e-9) {
  if (x.is_zero()) return {0.0, 0.0};
  size_t nv = x.ctx()->embedding_count();
  for (long prec = 64;; prec *= 2) {
    Dyadic lo, hi;
    bool first = true;
    for (size_t v = 0; v < nv; ++v) {
      DInterval iv = interval_abs(x.embed(v, prec));
      if (first || hi < iv.hi) hi = iv.hi;
      if (first || lo < iv.lo) lo = iv.lo;  // max of lower bounds
      first = false;
    }
    double dlo = lo.to_double(), dhi = hi.to_double();
    if (dhi - dlo <= rel_tol * std::max(1.0, dhi)) return {dlo, dhi};
    require(prec < (1L << 20), Errc::ConvergenceFailed, "norm enclosure did not converge");
  }
}

// Decides ||x|| < t for an integer t >= 0 exactly.
inline bool norm_less_than(const AlgebraicInt& x, const Int& t) {
  if (t <= 0) return false;
  if (x.is_zero()) return true;
  if (x.is_int(t) || x.is_int(-t)) return false;  // ||x|| == t exactly
  DInterval ti = DInterval::from_int(t);
  size_t nv = x.ctx()->embedding_count();
  for (size_t v = 0; v < nv; ++v) {
    for (long prec = 64;; prec *= 2) {
      DInterval a = interval_abs(x.embed(v, prec));
      if (a.hi < ti.lo) break;          // |x_v| < t, next embedding
      if (ti.lo < a.lo) return false;   // |x_v| > t
      require(prec < (1L << 20), Errc::ConvergenceFailed, "norm comparison did not converge");
    }
  }
  return true;
}

// Decides ||x|| <= t exactly.
inline bool norm_leq(const AlgebraicInt& x, const Int& t) {
  if (x.is_zero()) return t >= 0;
  if (x.is_int(t) || x.is_int(-t)) return true;
  return norm_less_than(x, t);
}

inline bool norm_geq_one(const AlgebraicInt& x) {
  if (x.is_zero()) return false;
  return !norm_less_than(x, 1);
}

// --- exact division --------------------------------------------------------
//
// Division a/b in O when b | a (used by fraction-free elimination and by
// E-basis coordinate extraction). Implemented through a scaled inverse:
// find an integer polynomial u and a positive integer N with
// u * b == N (mod psi); then a/b = (a*u)/N with exact integer division.

struct ScaledInverse {
  Poly num;  // integer polynomial u
  Int den;   // positive integer N
};

namespace detail {

using RPoly = std::vector<Rat>;

inline void rtrim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly rmul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  rtrim(r);
  return r;
}

inline RPoly rsub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rtrim(a);
  return a;
}

inline RPoly rmod(RPoly a, const RPoly& d) {
  while (a.size() >= d.size() && !a.empty()) {
    Rat c = a.back() / d.back();
    size_t shift = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= c * d[i];
    rtrim(a);
  }
  return a;
}

}  // namespace detail

// Computes (u, N) with u*b == N mod psi. Requires b nonzero in O.
inline ScaledInverse scaled_inverse(const AlgebraicInt& b) {
  require(!b.is_zero(), Errc::Internal, "division by zero in O");
  using detail::RPoly;
  const Poly& psi = b.ctx()->psi();
  RPoly r0(psi.size()), r1(b.coeffs().size());
  for (size_t i = 0; i < psi.size(); ++i) r0[i] = Rat(psi[i]);
  for (size_t i = 0; i < b.coeffs().size(); ++i) r1[i] = Rat(b.coeffs()[i]);
  // Extended Euclid tracking only the coefficient of b.
  RPoly s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    // quotient of r0 by r1
    RPoly q;
    RPoly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      detail::rtrim(rem);
    }
    RPoly s2 = detail::rsub(s0, detail::rmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; psi irreducible and b != 0 mod psi force it constant.
  require(r0.size() == 1, Errc::Internal, "gcd(b, psi) not constant; psi reducible?");
  Rat g = r0[0];
  // b * (s0/g) == 1 mod psi. Clear denominators.
  RPoly u(s0.size());
  Int lcm_den = 1;
  for (size_t i = 0; i < s0.size(); ++i) {
    u[i] = s0[i] / g;
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(u[i]));
  }
  ScaledInverse si;
  si.num.resize(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    Rat scaled = u[i] * lcm_den;
    si.num[i] = boost::multiprecision::numerator(scaled);
  }
  si.den = lcm_den;
  if (si.den < 0) {
    si.den = -si.den;
    for (auto& x : si.num) x = -x;
  }
  return si;
}

// Exact quotient a/b in O; throws if the quotient is not integral.
inline AlgebraicInt div_exact(const AlgebraicInt& a, const AlgebraicInt& b,
                              const ScaledInverse* pre = nullptr) {
  ScaledInverse local;
  if (!pre) {
    local = scaled_inverse(b);
    pre = &local;
  }
  Poly t = poly_mod_monic(poly_mul(a.coeffs(), pre->num), a.ctx()->psi());
  for (auto& x : t) {
    require(x % pre->den == 0, Errc::Internal, "inexact division in O");
    x /= pre->den;
  }
  return AlgebraicInt(a.ctx(), std::move(t));
}

}  // namespace coxsys

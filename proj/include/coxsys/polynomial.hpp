#pragma once

#include <map>
#include <vector>

#include "coxsys/common.hpp"

namespace coxsys {

// Dense integer polynomial, constant term first. The zero polynomial is the
// empty coefficient vector.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

inline Poly poly_scale(const Poly& a, const Int& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

// Exact division by a monic divisor. Remainder must vanish when exact=true.
inline Poly poly_divmod_monic(Poly a, const Poly& d, Poly* rem = nullptr) {
  require(!d.empty() && d.back() == 1, Errc::Internal, "divisor must be monic");
  int dd = poly_deg(d);
  Poly q;
  if (poly_deg(a) >= dd) q.assign(a.size() - d.size() + 1, Int(0));
  for (int i = poly_deg(a); i >= dd; --i) {
    Int c = a[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) a[i - dd + j] -= c * d[j];
  }
  poly_trim(a);
  if (rem) *rem = a;
  poly_trim(q);
  return q;
}

inline Poly poly_mod_monic(Poly a, const Poly& d) {
  Poly r;
  poly_divmod_monic(std::move(a), d, &r);
  return r;
}

inline Int poly_eval(const Poly& p, const Int& x) {
  Int r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by all
// proper cyclotomic divisors.
inline Poly cyclotomic(unsigned n) {
  static std::map<unsigned, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) {
      Poly rem;
      num = poly_divmod_monic(std::move(num), cyclotomic(d), &rem);
      require(rem.empty(), Errc::Internal, "cyclotomic division not exact");
    }
  }
  cache[n] = num;
  return num;
}

// For a palindromic polynomial P of even degree 2m, returns the unique psi
// with P(x) = x^m * psi(x + 1/x), using x^j + x^-j = D_j(y),
// D_0 = 2, D_1 = y, D_j = y*D_{j-1} - D_{j-2}.
inline Poly palindromic_compress(const Poly& p) {
  int deg = poly_deg(p);
  require(deg >= 0 && deg % 2 == 0, Errc::Internal, "need even degree");
  int m = deg / 2;
  for (int i = 0; i <= deg; ++i)
    require(p[i] == p[deg - i], Errc::Internal, "polynomial not palindromic");
  std::vector<Poly> dick(m + 1);
  dick[0] = {Int(2)};
  if (m >= 1) dick[1] = {Int(0), Int(1)};
  for (int j = 2; j <= m; ++j)
    dick[j] = poly_sub(poly_mul(Poly{Int(0), Int(1)}, dick[j - 1]), dick[j - 2]);
  Poly psi = {p[m]};
  for (int j = 1; j <= m; ++j) psi = poly_add(psi, poly_scale(dick[j], p[m + j]));
  poly_trim(psi);
  return psi;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Resultant of two integer polynomials via the Sylvester matrix with
// fraction-free (Bareiss) elimination.
inline Int resultant(const Poly& a, const Poly& b) {
  int da = poly_deg(a), db = poly_deg(b);
  if (da < 0 || db < 0) return 0;
  int n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) s[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) s[db + i][i + j] = b[db - j];
  Int prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    if (s[col][col] == 0) {
      int piv = -1;
      for (int r2 = col + 1; r2 < n; ++r2)
        if (s[r2][col] != 0) { piv = r2; break; }
      if (piv < 0) return 0;
      std::swap(s[col], s[piv]);
      sign = -sign;
    }
    for (int r2 = col + 1; r2 < n; ++r2) {
      for (int c2 = col + 1; c2 < n; ++c2) {
        Int num = s[col][col] * s[r2][c2] - s[r2][col] * s[col][c2];
        s[r2][c2] = num / prev;
      }
      s[r2][col] = 0;
    }
    prev = s[col][col];
  }
  return sign > 0 ? s[n - 1][n - 1] : -s[n - 1][n - 1];
}

}  // namespace coxsys

#pragma once

#include <algorithm>
#include <cmath>

#include "coxsys/common.hpp"
#include "coxsys/polynomial.hpp"

namespace coxsys {

// Dyadic rational num / 2^exp. Closed under +, -, *, so interval arithmetic
// over dyadic endpoints is exact: the only width comes from the inputs.
struct Dyadic {
  Int num;
  long exp = 0;

  Dyadic() : num(0) {}
  Dyadic(Int n, long e = 0) : num(std::move(n)), exp(e) {}

  static Dyadic from_int(const Int& n) { return Dyadic(n, 0); }

  double to_double() const { return std::ldexp(num.convert_to<double>(), -static_cast<int>(exp)); }
};

inline void dyadic_align(Dyadic& a, Dyadic& b) {
  if (a.exp < b.exp) {
    a.num <<= (b.exp - a.exp);
    a.exp = b.exp;
  } else if (b.exp < a.exp) {
    b.num <<= (a.exp - b.exp);
    b.exp = a.exp;
  }
}

inline Dyadic operator+(Dyadic a, Dyadic b) {
  dyadic_align(a, b);
  return Dyadic(a.num + b.num, a.exp);
}
inline Dyadic operator-(Dyadic a, Dyadic b) {
  dyadic_align(a, b);
  return Dyadic(a.num - b.num, a.exp);
}
inline Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num * b.num, a.exp + b.exp);
}
inline Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num, a.exp); }

inline int dyadic_cmp(Dyadic a, Dyadic b) {
  dyadic_align(a, b);
  if (a.num < b.num) return -1;
  if (a.num > b.num) return 1;
  return 0;
}
inline bool operator<(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) <= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) == 0; }

inline int dyadic_sign(const Dyadic& a) { return a.num == 0 ? 0 : (a.num < 0 ? -1 : 1); }

inline Dyadic dyadic_mid(Dyadic a, Dyadic b) {
  dyadic_align(a, b);
  return Dyadic(a.num + b.num, a.exp + 1);
}

// Closed interval [lo, hi] with exact dyadic endpoints.
struct DInterval {
  Dyadic lo, hi;

  DInterval() = default;
  DInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}
  static DInterval point(const Dyadic& d) { return DInterval(d, d); }
  static DInterval from_int(const Int& n) { return point(Dyadic::from_int(n)); }

  Dyadic width() const { return hi - lo; }
};

inline DInterval operator+(const DInterval& a, const DInterval& b) {
  return DInterval(a.lo + b.lo, a.hi + b.hi);
}
inline DInterval operator-(const DInterval& a, const DInterval& b) {
  return DInterval(a.lo - b.hi, a.hi - b.lo);
}
inline DInterval operator*(const DInterval& a, const DInterval& b) {
  Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Dyadic lo = p1, hi = p1;
  for (const Dyadic* p : {&p2, &p3, &p4}) {
    if (*p < lo) lo = *p;
    if (hi < *p) hi = *p;
  }
  return DInterval(lo, hi);
}

inline DInterval interval_abs(const DInterval& a) {
  if (dyadic_sign(a.lo) >= 0) return a;
  if (dyadic_sign(a.hi) <= 0) return DInterval(-a.hi, -a.lo);
  Dyadic m = -a.lo;
  if (m < a.hi) m = a.hi;
  return DInterval(Dyadic(Int(0)), m);
}

// Horner evaluation of an integer polynomial over a dyadic interval; exact.
inline DInterval poly_eval_interval(const Poly& p, const DInterval& x) {
  DInterval r = DInterval::from_int(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + DInterval::from_int(p[i]);
  return r;
}

inline Dyadic poly_eval_dyadic(const Poly& p, const Dyadic& x) {
  Dyadic r(Int(0), 0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + Dyadic::from_int(p[i]);
  return r;
}

// Enclosure of a real root of an integer polynomial, refinable by bisection
// with exact sign evaluation at dyadic points. An exact dyadic root collapses
// the enclosure to a point.
struct RootEnclosure {
  DInterval iv;
  bool exact = false;

  // Sign of the polynomial at lo must differ from the sign at hi unless exact.
  void refine(const Poly& p, long target_exp) {
    if (exact) return;
    while (Dyadic(Int(1), target_exp) < iv.width()) {
      Dyadic m = dyadic_mid(iv.lo, iv.hi);
      int sm = dyadic_sign(poly_eval_dyadic(p, m));
      if (sm == 0) {
        iv = DInterval::point(m);
        exact = true;
        return;
      }
      int slo = dyadic_sign(poly_eval_dyadic(p, iv.lo));
      if (slo == sm)
        iv.lo = m;
      else
        iv.hi = m;
    }
  }
};

}  // namespace coxsys

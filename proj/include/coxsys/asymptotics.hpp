#pragma once

#include <cmath>
#include <vector>

#include "coxsys/common.hpp"

namespace coxsys {

// Euler's constant and the derived constants of the bound chain.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

inline double exp_minus_gamma() { return std::exp(-kEulerGamma); }

// delta = 12 sqrt(e^{-gamma} ln 3) = 9.4246...
inline double delta_constant() { return 12.0 * std::sqrt(exp_minus_gamma() * std::log(3.0)); }

// Natural log of a big integer via its top bits.
inline double ln_big(const Int& n) {
  require(n > 0, Errc::Domain, "ln of a nonpositive integer");
  if (n <= Int(1) << 52) return std::log(n.convert_to<double>());
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n));
  Int top = n >> (bits - 52);
  return std::log(top.convert_to<double>()) + (static_cast<double>(bits) - 52.0) * std::numbers::ln2;
}

inline double to_double_guarded(const Int& n) {
  require(boost::multiprecision::msb(n) < 1000, Errc::Domain, "integer too large for double");
  return n.convert_to<double>();
}

struct PrimorialRow {
  int n = 0;       // index: q_n = 2 * p_1 * ... * p_n over the odd primes
  Int q;           // the primorial
  Int phi;         // Euler totient of q
};

inline std::vector<int> first_odd_primes(int n) {
  std::vector<int> primes;
  for (int c = 3; static_cast<int>(primes.size()) < n; c += 2) {
    bool ok = true;
    for (int p : primes) {
      if (static_cast<long>(p) * p > c) break;
      if (c % p == 0) { ok = false; break; }
    }
    if (ok) primes.push_back(c);
  }
  return primes;
}

// q_n = 2 * product of the first n odd primes; phi multiplicative over the
// distinct prime factors.
inline std::vector<PrimorialRow> totient_primorials(int n) {
  require(n >= 1, Errc::Usage, "need n >= 1");
  std::vector<PrimorialRow> rows;
  std::vector<int> primes = first_odd_primes(n);
  Int q = 2, phi = 1;
  for (int i = 0; i < n; ++i) {
    q *= primes[static_cast<size_t>(i)];
    phi *= primes[static_cast<size_t>(i)] - 1;
    rows.push_back({i + 1, q, phi});
  }
  return rows;
}

// Independent totient oracle by direct factorization (for values small
// enough to factor by trial division).
inline Int totient_oracle(Int n) {
  Int result = n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

struct LandauRow {
  int n;
  Int q, phi;
  double lnln_q;
  double ratio;         // (phi/q as an exact rational) * lnln q
  double ratio_oracle;  // direct double arithmetic
};

inline std::vector<LandauRow> landau_table(int n) {
  std::vector<LandauRow> rows;
  for (const auto& pr : totient_primorials(n)) {
    LandauRow r;
    r.n = pr.n;
    r.q = pr.q;
    r.phi = pr.phi;
    r.lnln_q = std::log(ln_big(pr.q));
    r.ratio = Rat(pr.phi, pr.q).convert_to<double>() * r.lnln_q;
    r.ratio_oracle = to_double_guarded(pr.phi) * r.lnln_q / to_double_guarded(pr.q);
    rows.push_back(r);
  }
  return rows;
}

// One row of the (24.2)-(24.4) report, evaluated in log space.
// ln delta(k) = 144 k phi(k) ln 3; delta(k) itself is never materialized.
struct ChainRow {
  int n;
  Int k, phi;
  double ln_delta;       // 144 k phi(k) ln 3
  double lnln_delta, lnlnln_delta;
  bool holds_242, holds_243, holds_244;
  double margin_242, margin_243, margin_244;  // relative log-space margins
  bool indeterminate = false;  // some margin below 1000x the error budget
};

struct ChainReport {
  double delta = 0;
  double delta_plus = 0;
  std::vector<ChainRow> rows;
  int first_242 = -1, first_243 = -1, first_244 = -1;  // first n where it holds
  bool monotone_242 = true, monotone_243 = true, monotone_244 = true;
};

inline double rel_margin(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

inline ChainReport bound_chain(const std::vector<PrimorialRow>& ks, double delta_plus,
                               double error_budget = 1e-9) {
  ChainReport rep;
  rep.delta = delta_constant();
  rep.delta_plus = delta_plus;
  require(delta_plus > rep.delta, Errc::Usage, "delta_plus must exceed delta");
  const double margin_floor = 1000.0 * error_budget;
  for (const auto& pr : ks) {
    ChainRow r;
    r.n = pr.n;
    r.k = pr.q;
    r.phi = pr.phi;
    r.ln_delta = 144.0 * std::log(3.0) * to_double_guarded(pr.q * pr.phi);
    r.lnln_delta = std::log(r.ln_delta);
    r.lnlnln_delta = std::log(r.lnln_delta);
    double ln_k = ln_big(pr.q);
    double lnln_k = std::log(ln_k);

    // (24.2) k > sqrt(ln delta(k)), log space: ln k vs ln(ln delta)/2
    double lhs2 = ln_k, rhs2 = 0.5 * r.lnln_delta;
    r.holds_242 = lhs2 > rhs2;
    r.margin_242 = rel_margin(lhs2, rhs2);

    // (24.3) (delta+)^2 lnln k > delta^2 lnlnln delta(k)
    double lhs3 = delta_plus * delta_plus * lnln_k;
    double rhs3 = rep.delta * rep.delta * r.lnlnln_delta;
    r.holds_243 = lhs3 > rhs3;
    r.margin_243 = rel_margin(lhs3, rhs3);

    // (24.4) 1/k < delta+ / (sqrt(lnlnln delta) sqrt(ln delta)),
    // log space: ln(delta+) + ln k vs (ln lnlnln delta + ln ln delta)/2
    double lhs4 = std::log(delta_plus) + ln_k;
    double rhs4 = 0.5 * (std::log(r.lnlnln_delta) + r.lnln_delta);
    r.holds_244 = lhs4 > rhs4;
    r.margin_244 = rel_margin(lhs4, rhs4);

    if (std::min({r.margin_242, r.margin_243, r.margin_244}) < margin_floor)
      r.indeterminate = true;
    rep.rows.push_back(r);
  }
  auto scan = [&](auto holds, int& first, bool& monotone) {
    for (const auto& r : rep.rows) {
      if (holds(r) && first < 0) first = r.n;
      if (!holds(r) && first >= 0) monotone = false;
    }
  };
  scan([](const ChainRow& r) { return r.holds_242; }, rep.first_242, rep.monotone_242);
  scan([](const ChainRow& r) { return r.holds_243; }, rep.first_243, rep.monotone_243);
  scan([](const ChainRow& r) { return r.holds_244; }, rep.first_244, rep.monotone_244);
  return rep;
}

// F(g) = 57 g / (sqrt(ln g) sqrt(lnlnln g)); needs g >= 16 so that
// lnlnln g > 0.
inline double fill_bound(double g) {
  require(g >= 16, Errc::Domain, "fill bound needs genus >= 16");
  double lg = std::log(g);
  return 57.0 * g / (std::sqrt(lg) * std::sqrt(std::log(std::log(lg))));
}

// The systole-count comparison 6 g / k < F(g).
inline bool systole_count_below_bound(double g, double k) { return 6.0 * g / k < fill_bound(g); }

}  // namespace coxsys

#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <vector>

#include "coxsys/dyadic.hpp"
#include "coxsys/polynomial.hpp"

namespace coxsys {

// Exact context for O = Z[2cos(pi/k)] inside K = Q(cos(pi/k)).
//
// psi is the minimal polynomial of c = 2cos(pi/k), extracted from the
// cyclotomic polynomial Phi_{2k} by the substitution y = x + 1/x. The real
// embeddings send c to 2cos(m*pi/k) for m coprime to 2k, 0 < m < k; each is
// kept as a bisection-refinable enclosure with exact integer endpoints
// scaled by a power of two.
class FieldContext {
 public:
  explicit FieldContext(int k) : k_(k) {
    require(k >= 3, Errc::KTooSmall, "k must be >= 3, got " + std::to_string(k));
    psi_ = palindromic_compress(cyclotomic(2 * static_cast<unsigned>(k)));
    degree_ = poly_deg(psi_);
    require(degree_ == static_cast<int>(euler_phi(2 * static_cast<unsigned>(k)) / 2),
            Errc::Internal, "degree mismatch with phi(2k)/2");
    init_embeddings();
  }

  int k() const { return k_; }
  const Poly& psi() const { return psi_; }
  int degree() const { return degree_; }
  size_t embedding_count() const { return roots_.size(); }

  // Enclosure of the image of c under embedding v, at least 2^-prec wide.
  DInterval embedding(size_t v, long prec) const {
    roots_[v].refine(psi_, prec);
    return roots_[v].iv;
  }

  double embedding_approx(size_t v) const { return approx_[v]; }

 private:
  void init_embeddings() {
    const int k = k_;
    for (int m = 1; m < k; ++m) {
      if (std::gcd(static_cast<unsigned>(m), 2 * static_cast<unsigned>(k)) != 1) continue;
      double x = 2.0 * std::cos(std::numbers::pi * m / k);
      // Bracket the double approximation, widening until the exact signs of
      // psi at the endpoints certify a root (or an endpoint hits it exactly).
      const long scale = 48;
      Int center(std::llround(std::ldexp(x, scale)));
      Int radius = 8;
      for (int attempt = 0; attempt < 40; ++attempt, radius *= 2) {
        Dyadic lo(center - radius, scale), hi(center + radius, scale);
        int slo = dyadic_sign(poly_eval_dyadic(psi_, lo));
        int shi = dyadic_sign(poly_eval_dyadic(psi_, hi));
        if (slo == 0) {
          roots_.push_back({DInterval::point(lo), true});
          break;
        }
        if (shi == 0) {
          roots_.push_back({DInterval::point(hi), true});
          break;
        }
        if (slo != shi) {
          roots_.push_back({DInterval(lo, hi), false});
          break;
        }
      }
      require(approx_.size() + 1 == roots_.size(), Errc::ConvergenceFailed,
              "could not isolate embedding 2cos(" + std::to_string(m) + "pi/" + std::to_string(k) + ")");
      approx_.push_back(x);
    }
    require(static_cast<int>(roots_.size()) == degree_, Errc::Internal,
            "embedding count must equal the field degree");
  }

  int k_;
  Poly psi_;
  int degree_;
  mutable std::vector<RootEnclosure> roots_;
  std::vector<double> approx_;
};

inline std::shared_ptr<const FieldContext> make_context(int k) {
  return std::make_shared<const FieldContext>(k);
}

}  // namespace coxsys

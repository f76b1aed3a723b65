#pragma once

#include "coxsys/schreier.hpp"

namespace coxsys {

inline int perm_parity(const std::vector<int>& img) {
  std::vector<char> seen(img.size(), 0);
  int parity = 1;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(img[j]);
      len++;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

// A finite group given by six labeled involution generators realizing the
// W(k) relations, together with a sign witness making the generator sign
// map eps(sigma_i) = -1 a well-defined homomorphism: odd permutations, or
// matrices of determinant -1 over an odd-characteristic ring.
struct QuotientDatum {
  int k = 0;

  // exactly one of the two generator families is populated
  std::vector<std::vector<int>> perm_gens;  // 0-based images
  size_t points = 0;

  std::vector<ModMat> mat_gens;
  std::shared_ptr<const ModContext> mat_ctx;

  bool is_permutation() const { return !perm_gens.empty(); }
};

namespace detail {

template <class Action>
long element_order(const Action& a, const typename Action::Elt& g, long cap) {
  typename Action::Elt p = g;
  for (long n = 1; n <= cap; ++n) {
    if (a.is_identity(p)) return n;
    p = a.compose(p, g);
  }
  return -1;
}

}  // namespace detail

// Relation and sign-witness validation; throws on an invalid datum.
template <class Action>
void validate_datum(const Action& a, const std::vector<typename Action::Elt>& g, int k,
                    const std::function<int(const typename Action::Elt&)>& sign_of) {
  require(g.size() == 6, Errc::Usage, "a quotient datum needs exactly six generators");
  require(k >= 2, Errc::Usage, "k must be >= 2");
  for (int i = 0; i < 6; ++i) {
    require(!a.is_identity(g[static_cast<size_t>(i)]), Errc::RelationFailed,
            "generator " + std::to_string(i + 1) + " is the identity");
    require(a.is_identity(a.compose(g[static_cast<size_t>(i)], g[static_cast<size_t>(i)])),
            Errc::RelationFailed, "generator " + std::to_string(i + 1) + " is not an involution");
    require(sign_of(g[static_cast<size_t>(i)]) == -1, Errc::Nonorientable,
            "sign witness fails: generator " + std::to_string(i + 1) + " must be odd");
  }
  for (int i = 0; i < 6; ++i) {
    auto ab = a.compose(g[static_cast<size_t>(i)], g[static_cast<size_t>((i + 1) % 6)]);
    require(a.is_identity(a.compose(ab, ab)), Errc::RelationFailed,
            "(sigma_" + std::to_string(i + 1) + " sigma_" + std::to_string((i + 1) % 6 + 1) +
                ")^2 != 1");
    auto ac = a.compose(g[static_cast<size_t>(i)], g[static_cast<size_t>((i + 2) % 6)]);
    long ord = detail::element_order(a, ac, k);
    require(ord > 0 && k % ord == 0, Errc::RelationFailed,
            "(sigma_" + std::to_string(i + 1) + " sigma_" + std::to_string((i + 2) % 6 + 1) +
                ")^k != 1");
  }
}

// The regularity gate of the surface builder (elementwise; valid because
// every implemented H is normal): sigma_i sigma_{i+1} != 1 for all i, and
// order(sigma_{i-1} sigma_{i+1}) = k exactly, for all i.
template <class Action>
void check_gates(const Action& a, const std::vector<typename Action::Elt>& g, int k) {
  for (int i = 0; i < 6; ++i) {
    auto ab = a.compose(g[static_cast<size_t>(i)], g[static_cast<size_t>((i + 1) % 6)]);
    require(!a.is_identity(ab), Errc::Condition11_1Violated,
            "sigma_" + std::to_string(i + 1) + " sigma_" + std::to_string((i + 1) % 6 + 1) +
                " = 1 (i=" + std::to_string(i + 1) + ")");
  }
  for (int i1 = 1; i1 <= 6; ++i1) {  // 1-based scan so reports match t_i indexing
    int prev = (i1 + 4) % 6;  // i-1, 0-based
    int next = i1 % 6;        // i+1, 0-based
    auto t = a.compose(g[static_cast<size_t>(prev)], g[static_cast<size_t>(next)]);
    long ord = detail::element_order(a, t, k);
    require(ord == k, Errc::Condition11_2Violated,
            "order(t_" + std::to_string(i1) + ") = " + std::to_string(ord) + " < k (i=" +
                std::to_string(i1) + ", l=" + std::to_string(ord) + ")");
  }
}

inline PermAction datum_perm_action(const QuotientDatum& d) { return PermAction{d.points}; }

inline std::function<int(const std::vector<int>&)> perm_sign_fn() {
  return [](const std::vector<int>& g) { return perm_parity(g); };
}

inline std::function<int(const MatAction::Elt&)> mat_sign_fn(std::shared_ptr<const ModContext> ctx) {
  require(ctx->modulus() % 2 == 1, Errc::Nonorientable,
          "determinant witness needs an odd modulus");
  return [ctx](const MatAction::Elt& g) {
    std::vector<Int> d = g.g.det();
    std::vector<Int> one(static_cast<size_t>(ctx->deg()), Int(0));
    one[0] = 1;
    if (d == one) return 1;
    std::vector<Int> minus = one;
    minus[0] = ctx->modulus() - 1;
    if (d == minus) return -1;
    fail(Errc::Nonorientable, "determinant is not +-1");
  };
}

}  // namespace coxsys

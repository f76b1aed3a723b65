#pragma once

#include "coxsys/ball.hpp"
#include "coxsys/mod_matrix.hpp"

namespace coxsys {

// Congruence machinery for H(k) = {w : rho(w) - 1 in 3^m R}, where
// R = (+) O E_{i,j}. Membership is tested on the E-basis coordinates of
// rho(w) - 1, which always lie in O; this keeps the avoidance argument
// intact: a nonzero coordinate divisible by 3^m has norm >= 3^m, while
// Lemma-21-type bounds give norm < 3^{l(w)}.

inline Mat6 rho_minus_one_coords(const TitsContext& t, const Mat6& rho_w) {
  return t.e_coordinates(rho_w - Mat6::identity(t.field()));
}

inline bool coords_divisible(const Mat6& coords, const Int& modulus) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!coords.at(i, j).divisible_by(modulus)) return false;
  return true;
}

inline bool in_H(const TitsContext& t, const Word& w, int m_exp) {
  require(m_exp >= 1, Errc::Usage, "modulus exponent must be >= 1");
  return coords_divisible(rho_minus_one_coords(t, t.rho(w)), pow3(static_cast<unsigned>(m_exp)));
}

// Entrywise reduction of rho(w) modulo 3^m (the finite-group image used for
// quotient construction; a ring homomorphism, so products are compatible).
inline ModMat congruence_image(const TitsContext& t, const Word& w, int m_exp) {
  require(m_exp >= 1, Errc::Usage, "modulus exponent must be >= 1");
  auto ctx = std::make_shared<const ModContext>(pow3(static_cast<unsigned>(m_exp)),
                                                t.field()->psi());
  return ModMat::from_exact(ctx, t.rho(w));
}

struct AvoidanceCertificate {
  int k = 0;
  int m = 0;                 // modulus exponent: modulus 3^m
  int radius_checked = 0;    // exhaustive certificate radius
  int analytic_radius = 0;   // = m; guaranteed by the norm bounds alone
  bool exhaustive_pass = false;
  bool criterion18_covered = false;  // analytic radius >= 4k
  size_t elements_checked = 0;
  std::vector<std::pair<Word, int>> violations;  // nontrivial elements with trivial image
};

// Two independent certificates that B_radius meets H(k) trivially:
// (a) exhaustive, over an enumerated ball; (b) analytic, radius m for free
// from ||rho(w)-1|| < 3^{l(w)} and ||x|| >= 1 on O \ {0}. A violation found
// by (a) at depth <= m contradicts (b) and is reported as INCONSISTENT.
inline AvoidanceCertificate ball_avoidance_certificate(const TitsContext& t, int m_exp,
                                                       const Ball& ball) {
  require(m_exp >= 1, Errc::Usage, "modulus exponent must be >= 1");
  AvoidanceCertificate cert;
  cert.k = t.k();
  cert.m = m_exp;
  cert.radius_checked = ball.radius;
  cert.analytic_radius = m_exp;
  cert.criterion18_covered = m_exp >= 4 * t.k();
  Int modulus = pow3(static_cast<unsigned>(m_exp));
  cert.exhaustive_pass = true;
  for (size_t i = 1; i < ball.elems.size(); ++i) {
    const auto& e = ball.elems[i];
    if (coords_divisible(rho_minus_one_coords(t, e.matrix), modulus)) {
      cert.exhaustive_pass = false;
      cert.violations.emplace_back(e.witness, e.depth);
      require(e.depth > m_exp, Errc::Inconsistent,
              "element " + word_to_string(e.witness) + " of length " + std::to_string(e.depth) +
                  " <= m lies in H(k); exhaustive and analytic certificates disagree");
    }
  }
  cert.elements_checked = ball.elems.size() - 1;
  return cert;
}

}  // namespace coxsys

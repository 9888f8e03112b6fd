#pragma once

#include <span>
#include <utility>
#include <vector>

#include "zklaims/algebra/curve.hpp"

namespace zklaims::algebra {

/// Line coefficients of the Miller loop for a fixed G2 point.
struct G2Prepared {
  struct Line {
    Fq2 ell_0, ell_vw, ell_vv;
  };
  std::vector<Line> lines;
  bool infinity = false;
};

G2Prepared prepare_g2(const G2Affine& q);

Fq12 miller_loop(const G1Affine& p, const G2Prepared& q);

Fq12 final_exponentiation(const Fq12& f);

/// Optimal ate pairing e(P, Q).
Fq12 pairing(const G1Affine& p, const G2Affine& q);

/// Product of pairings, sharing one final exponentiation.
Fq12 multi_pairing(std::span<const std::pair<G1Affine, G2Prepared>> terms);

}  // namespace zklaims::algebra

#pragma once

#include "stardef/element.hpp"
#include "stardef/presets.hpp"

namespace stardef {

// Closed-form first-order brackets, evaluated without the recurrence engine
// (no bullet, no homotopy, no cochains):
//   moyal       1/2 pi^{ij} d_i a d_j b
//   smash       1/2 pi^{ij} d_i a d_j b
//               + sum_{g in S} c(g) int_{0<w<s<1} (d_i a)((1-s)x + s g.x)
//                                               (d_j b)((1-w)x + w g.x) pi_g^{ij} g
//   weyl-smash  sum_{g in S} c(g) int_{0<w<s<1} exp(<p1, y1> + <p2, y2> + Q(s, w))
//               pi_g(p1, p2) a(x1) b(x2) g |_{x1 = x2 = 0},
//               p_k = d/dx_k, y1 = (1-s)x + s g.x, y2 = (1-w)x + w g.x, and Q the
//               quadratic exponent in p1, p2 with the pi(p, g.p) corrections.
// Simplex integrals are exact: int s^a w^b = 1 / ((b + 1)(a + b + 2)).
// Inputs are polynomials in x (elements of S(V*)); the result is an exact
// element of A_Gamma. pi_g is computed here from its definition
// pi_g(q, r) = pi(q - q g, r - r g), independently of the group module.
//
// The printed brackets are obtained by letting the second argument act from
// the left on the term built from the first, b(x + d/dp) (h delta h lambda)(a),
// whereas the coboundary delta = [m, .] used by the recurrence leaves
// a(x + d/dp) (h delta h lambda)(b) at p = 0. So the printed formula L is
// the engine's bracket with the arguments exchanged, and with the seed
// orientation fixed by seed_sign() the engine computes
//   mu_1(a, b) = -L(b, a).
// reference_mu1_literal evaluates L(a, b) verbatim; reference_mu1 returns
// -L(b, a), the value the engine must reproduce.
Element reference_mu1_literal(Preset const &preset, Polynomial const &a,
                              Polynomial const &b);
Element reference_mu1(Preset const &preset, Polynomial const &a, Polynomial const &b);

} // namespace stardef

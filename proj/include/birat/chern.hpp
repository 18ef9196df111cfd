#pragma once

// Segre classes of the embedded base locus, the fundamental projection
// formulae relating them to (z, bz, b^2 z - e), and the classical surface /
// threefold identities (Noether, the P^5 double-point relations, and the
// c3 expression for codimension-2 threefolds in P^5).
//
// Conventions. X subset P^r is smooth of dimension n with degree d and
// sectional genus g. s_k denotes the degree of the k-th Segre class of the
// normal bundle twist used by the projection formulae; s_0 = d. For
// surfaces, K2 = K_S^2 and chi = chi(O_S); for threefolds, c2S = c_2 of the
// general surface section S, c3X = c_3(X) (topological Euler number).

#include "birat/exact.hpp"

#include <vector>

namespace birat::chern {

using exact::Int;

// n = 1:  s_1 = 2 - 2g - (r+1) d.
std::vector<Int> segre_curve(const Int& d, const Int& g, int r);

// n = 2:  s_1 = 2 - 2g - r d
//         s_2 = c_2(S) - (r+1)(2-2g) + C(r+1,2) d,   c_2(S) = 12 chi - K2.
std::vector<Int> segre_surface(const Int& d, const Int& g, const Int& K2,
                               const Int& chi, int r);

// n = 3:  s_1 = 2 - 2g - (r-1) d
//         s_2 = c2S - r (2-2g) + C(r,2) d
//         s_3 = c3X - (r+1) c2S + C(r+1,2)(2-2g) - C(r+1,3) d.
std::vector<Int> segre_threefold(const Int& d, const Int& g, const Int& c2S,
                                 const Int& c3X, int r);

// Noether's formula on a surface: c_2(S) = 12 chi(O_S) - K_S^2.
Int noether_c2(const Int& chi, const Int& K2);

// For a smooth threefold X of codimension 2 in P^5 with surface section S:
//   c_3(X) = 6 K_S^2 + 24 chi(O_X) - 72 chi(O_S) - 2d(d - 6 - g) + 12(g-1).
// Valid only in that situation (r = 5, codim 2); callers outside it must
// supply c_3 directly.
Int c3_formula(const Int& d, const Int& g, const Int& chiS, const Int& chiX,
               const Int& KS2);

// Double-point relations for a smooth threefold of codimension 2 in P^5:
//   K_X^3  = -5 d^2 + d(2g+25) + 24(g-1) - 36 chi(O_S) - 24 chi(O_X)
//   2 K_S^2 =  d^2 - 5d - 10(g-1) + 12 chi(O_S)
// Throws std::domain_error if the right side of the second relation is odd.
struct P5Relations {
  Int KX3;
  Int KS2;
};
P5Relations p5_relations(const Int& d, const Int& g, const Int& chiS,
                         const Int& chiX);

// The projection formulae: for a transformation of type (a, b) with base
// locus X (segre = [s_0 .. s_n], s_0 = d),
//   z           = a^r     - sum_{i=0}^{n} C(r,   i  ) a^i     s_{n-i}
//   b z         = a^{r-1} - sum_{i=1}^{n} C(r-1, i-1) a^{i-1} s_{n-i}
//   b^2 z - e   = a^{r-2} - sum_{i=2}^{n} C(r-2, i-2) a^{i-2} s_{n-i}
// where z = deg Z and e = deg Y when Y has codimension 2 in Z (e = 0
// otherwise). Requires d < a^{r-n} (X cut out by degree-a forms).
struct FundamentalValues {
  Int z;
  Int bz;
  Int b2z_minus_e;
};
FundamentalValues fundamental_system(int n, int r, const Int& a,
                                     const std::vector<Int>& segre);

}  // namespace birat::chern

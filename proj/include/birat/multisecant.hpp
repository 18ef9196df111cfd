#pragma once

// Multisecant-line counts for smooth surfaces in P^4 / P^6 (after Le Barz).
// Each count is the virtual number of k-secant lines (through a point /
// meeting a line / total, as appropriate to the classical formula); it is
// enumeratively valid only when the family of such lines is finite, which
// fails for scrolls in the flagged cases. The counts drive the Diophantine
// eliminations: on the base loci considered here the relevant counts vanish
// (or equal 2b - 1 for the trisecants-through-a-point count in P^6).

#include "birat/exact.hpp"

#include <vector>

namespace birat::multisecant {

using exact::Int;
using exact::Rat;

struct SecantCount {
  Rat value;               // the virtual count
  bool applicable = true;  // false when the formula is not enumerative
  const char* caveat = ""; // reason when not applicable
};

// Secant lines through a general point, S in P^r (r >= 5):
//   N2 = ( d^2 - 5d - 10(g-1) - 2 K2 + 12 chi ) / 2.
// For S in P^4 the same expression is the classical double-point relation,
// identically zero on every smooth embedded surface; the solvers re-check
// it as a consistency filter on candidate invariants.
SecantCount n2(const Int& d, const Int& g, const Int& K2, const Int& chi);

// Trisecant lines through a general point, S in P^6; not enumerative for
// scrolls in P^6:
//   N36 = ( d^3 - 12 d^2 + d(18 chi - 18 g - 3 K2 + 50)
//           - 12 (10 chi - 11 g - 2 K2 + 11) ) / 3.
SecantCount n3_6(const Int& d, const Int& g, const Int& K2, const Int& chi,
                 bool scroll = false);

// Trisecant lines meeting a general line, S in P^4:
//   N34 = ( 12 chi + d^3 - 6 d^2 + d(11 - 6g) + 18(g-1) ) / 6.
// Vanishes exactly for the quintic elliptic scroll and for surfaces on a
// quadric.
SecantCount n3_4(const Int& d, const Int& g, const Int& chi);

// Quadrisecant lines meeting a general plane, S in P^4:
//   N44 = ( 8 chi (2d-9) + d^4 - 10 d^3 + d^2(35-8g) + 2d(28g-33)
//           + 4 (g^2 - 25g + 24) ) / 8.
SecantCount n4_4(const Int& d, const Int& g, const Int& chi);

// Quinquesecant lines, S in P^4; not enumerative for scrolls in P^4 (the
// only smooth non-degenerate scrolls there are the cubic rational normal
// and the quintic elliptic one):
//   N54 = ( 24 chi (d^2 - 12d - 2(g-22)) + d^5 - 16 d^4 + d^3(95-12g)
//           + 52 d^2(3g-5) + 12 d(2g^2-62g+43) - 120(g^2-11g+10) ) / 24.
SecantCount n5_4(const Int& d, const Int& g, const Int& chi,
                 bool scroll = false);

// Six-secant lines, S in P^4, with the correction for lines L_j contained
// in S of self-intersection l_j >= -1 (each contributes C(7 + l_j, 6)):
//   N64 = ( 288 chi^2 + 24 chi (2d^3 - 39 d^2 + d(355-12g) + 90(g-16))
//           + d^6 - 21 d^5 + d^4(157-18g) + 3 d^3(116g-65)
//           + 2 d^2(36g^2 - 1431g - 1663) - 12 d(72g^2 - 1033g - 774)
//           - 24 (g^3 - 111g^2 + 854g - 744) ) / 144
//         - sum_j C(7 + l_j, 6).
// Not enumerative for scrolls in P^4.
SecantCount n6_4(const Int& d, const Int& g, const Int& chi,
                 const std::vector<int>& line_self_intersections = {},
                 bool scroll = false);

}  // namespace birat::multisecant

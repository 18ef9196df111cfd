#pragma once

// The per-case Diophantine searches producing the maximal candidate lists,
// with full derivation traces.
//
// Search discipline (fixed, so output is deterministic and matches the
// classical case analysis): families in numerology order with b descending;
// for each (family, b), target degrees z in the order of the Fano degree
// list (or ascending equation roots when no list exists); degrees d
// ascending within the allowed range. Every discarded candidate is recorded
// with the exact reason (non-integrality, negativity, coindex clash, or a
// curated exclusion that the solver re-verifies when it can).

#include "birat/exact.hpp"
#include "birat/numerology.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace birat::solver {

using exact::Int;
using numerology::TransformationType;

enum class Provenance { derived, curated };

const char* to_string(Provenance p);

// One row of a maximal list. Optional fields are filled per dimension:
// n = 1 uses only (d, g, z, e); n = 2 adds (K2, chi); n = 3 adds
// (KS2, chiS, chiX, KX3) when the branch determines them.
struct Candidate {
  TransformationType type;
  std::string case_id;  // e.g. "n2.xi", assigned in output order
  std::string branch;   // e.g. "r6-scroll", "a4", "a5-b1", "easy-r7"
  Provenance provenance = Provenance::derived;
  bool scroll = false;

  Int d;
  Int g;
  Int z;
  Int e;

  std::optional<Int> K2;    // K_S^2             (n = 2)
  std::optional<Int> chi;   // chi(O_S)          (n = 2)
  std::optional<Int> KS2;   // K_S^2 of the surface section   (n = 3)
  std::optional<Int> chiS;  // chi(O_S) of the surface section (n = 3)
  std::optional<Int> chiX;  // chi(O_X)          (n = 3)
  std::optional<Int> KX3;   // K_X^3             (n = 3)

  std::string note;                     // description for curated rows
  std::vector<std::string> derivation;  // trace lines
};

struct Rejection {
  TransformationType type;
  std::string branch;
  std::string candidate;  // rendered key, e.g. "b=1 z=16 d=4"
  std::string reason;
  Provenance provenance = Provenance::derived;
};

struct SolveResult {
  std::vector<Candidate> rows;
  std::vector<Rejection> rejected;
};

// Curves in P^3 / P^4: closed-form solution of the projection formulae per
// admissible target degree. 10 rows (cases n1.i .. n1.x).
SolveResult solve_n1();

// Surfaces: the r = 6 scroll and general branches, the curated r = 5 pairs
// (the trisecant count in P^4 vanishes identically, so that family is
// closed by the classical surface classification), the r = 4 quintisecant /
// quadrisecant eliminations, and the m = 0 quadric. 20 rows (n2.i .. n2.xx).
SolveResult solve_n2();

// Threefolds of type (4, b) in P^5. 3 rows (4b.i .. 4b.iii).
SolveResult solve_n3_a4();

// Threefolds of type (5, b) in P^5. For b >= max(b_min, 2): the (d, e) grid
// bounded by d < 25, 0 <= e < z b^2, solving the six-secant elimination.
// With b_min = 1 the b = 1 search also runs: degree windows per d with the
// six-secant count reduced to a quadratic in z. 4 rows (5b.i .. 5b.iv) plus
// 11 rows (51.i .. 51.xi) when b_min = 1.
SolveResult solve_n3_a5(int b_min = 2);

// The families settled by classical classification results rather than a
// search: r = 7 (three rows), r = 6 with a = 2 (one row), and the r = 5
// types (3, 1) and (2, 1). Each curated row is re-validated through the
// projection formulae. 6 rows (e3.i .. e3.vi).
SolveResult solve_n3_easy();

// Invariants of the residual of X in a complete intersection (p, q):
//   d' = p q - d,   g' = g - (p + q - 4)(d - d') / 2.
// Throws std::domain_error if d < 1, d > p q, or the correction is odd.
std::pair<Int, Int> liaison_invariants(const Int& d, const Int& g, int p,
                                       int q);

}  // namespace birat::solver

#pragma once

// Twisted exterior powers of the cotangent bundle on P^r, two-term locally
// free resolutions of ideal sheaves, exact Hilbert polynomials, and the
// liaison transport of resolutions.
//
// Term grammar (used by the knowledge file and the CLI):
//   O(-5)      structure sheaf twist          Om2(-1)   Omega^2(-1)
//   T(-7)      tangent bundle twist           exponent  ^k for multiplicity
// A resolution is written  "left -> right"  meaning the exact sequence
//   0 -> left -> right -> I_X -> 0   on P^r.

#include "birat/exact.hpp"

#include <string>
#include <vector>

namespace birat::sheaf {

using exact::Int;
using exact::Rat;

// A direct summand Omega^p_{P^r}(twist)^mult in canonical form:
//   O(t)  == Omega^0(t),   T(t) == Omega^{r-1}(t+r+1),
//   Omega^r(t) == O(t-r-1)  (folds back to p = 0).
struct BundleTerm {
  int p = 0;      // exterior power, 0 <= p <= r-1 after canonicalization
  int twist = 0;
  int mult = 1;

  friend bool operator==(const BundleTerm&, const BundleTerm&) = default;
};

struct SheafResolution {
  int r = 0;                      // ambient projective space P^r
  std::vector<BundleTerm> left;   // the injecting bundle E
  std::vector<BundleTerm> right;  // the surjecting bundle F

  friend bool operator==(const SheafResolution&,
                         const SheafResolution&) = default;
};

// Canonicalize a raw (p, twist, mult) on P^r per the rules above.
BundleTerm canonical(int r, int p, int twist, int mult);

// Serre dual of a term: (Omega^p(t))^* = Omega^{r-p}(r+1-t).
BundleTerm dualize(int r, const BundleTerm& term);

// rank Omega^p = C(r, p).
Int term_rank(int r, const BundleTerm& term);

// chi(Omega^p_{P^r}(t)) = sum_{j=0}^{p} (-1)^{p-j} C(r+1, j) chi(O(t-j)),
// with chi(O_{P^r}(k)) = C(k+r, r) as a signed binomial.
Int chi_omega(int r, int p, const Int& t);

// chi(I_X(t)) and chi(O_X(t)) for the resolution.
Int chi_ideal(const SheafResolution& res, const Int& t);
Int chi_structure(const SheafResolution& res, const Int& t);

// Numerical profile extracted from the Hilbert polynomial chi(O_X(t)):
//   dim     = deg chi(O_X(t)),   codim = r - dim
//   d       = leading coefficient * dim!
//   g       = 1 - chi(O_C(0)) where chi(O_C(t)) is the (dim-1)-fold
//             backward difference of chi(O_X(t))   (curve section)
//   chi     = chi(O_X(0)).
// Throws std::domain_error when the resolution does not cut out a proper
// subvariety (e.g. left == right, which cancels to the zero ideal).
struct HilbertProfile {
  Int d;
  Int g;
  Int chi;
  int dim = 0;
  int codim = 0;
};
HilbertProfile hilbert_from_resolution(const SheafResolution& res);

// Liaison transport: if X (resolution 0 -> E -> F -> I_X -> 0) is linked to
// X' by a complete intersection (p, q), then
//   0 -> F^*(-p-q) -> E^*(-p-q) + O(-p) + O(-q) -> I_{X'} -> 0 ,
// after cancelling summands common to both sides. Valid under the usual
// cohomological hypotheses, which are *not* checkable from the resolution
// alone and are returned as assumption strings.
struct LiaisonResult {
  SheafResolution res;
  std::vector<std::string> assumptions;
};
LiaisonResult liaison_resolution(const SheafResolution& res, int p, int q);

// Rendering and parsing of the grammar documented above. parse_* throw
// std::runtime_error with a description on malformed input.
std::string to_string(const BundleTerm& term);
std::string to_string(const SheafResolution& res);  // "left -> right"
std::vector<BundleTerm> parse_terms(const std::string& text, int r);
SheafResolution parse_resolution(const std::string& text, int r);

}  // namespace birat::sheaf

#pragma once

// Exact integer/rational arithmetic used throughout the engine.
//
// Every invariant that feeds a divisibility or root test is kept exact;
// several intermediate values (e.g. the six-secant count at degree 20,
// genus 51) overflow 64-bit integers, so the engine is built on arbitrary
// precision end to end.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace birat::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) for integer n (possibly negative) and k >= 0:
//   C(n, k) = n (n-1) ... (n-k+1) / k!
// The generalized form is what signed Euler characteristics on projective
// space expand into.
Int binomial(const Int& n, unsigned k);

// a^e for e >= 0.
Int pow(const Int& a, unsigned e);

// floor(sqrt(s)); throws std::domain_error for s < 0.
Int integer_sqrt(const Int& s);

// The exact square root if s is a perfect square, otherwise nullopt.
std::optional<Int> exact_sqrt(const Int& s);

// All integer roots of A x^2 + B x + C = 0, sorted ascending, deduplicated.
// A == 0 degrades to the linear equation; A == B == 0 with C != 0 has no
// roots; A == B == C == 0 throws (every integer is a root).
std::vector<Int> quadratic_integer_roots(const Int& A, const Int& B,
                                         const Int& C);

// True iff den divides num exactly (den != 0).
bool divides(const Int& num, const Int& den);

// num / den when exact; throws std::domain_error otherwise. The `what`
// string is included in the error to make solver traces readable.
Int exact_div(const Int& num, const Int& den, const char* what = "quotient");

// True iff q is an integer.
bool is_integer(const Rat& q);

// Decimal rendering helpers (used by the deterministic reporters).
std::string to_string(const Int& v);
std::string to_string(const Rat& q);

}  // namespace birat::exact

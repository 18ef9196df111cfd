#pragma once

// Enumeration of the numerical types (n, r, a, b, i, m) of special
// birational transformations P^r --> Z of type (a, b) whose base locus is a
// smooth n-dimensional variety, where Z is a Fano manifold of index i and
// the image of the exceptional behaviour downstairs is m-dimensional.
//
// The two defining relations are
//   (i)   i       = (r+1) b - (r-n-1)(a b - 1)
//   (ii)  r + 1   = i a     - (r-m-1)(a b - 1)
// together with the integrality of a = (m+2)/(r-n-1) and the classical
// bounds collected in bounds_check().

#include <vector>

namespace birat::numerology {

struct TransformationType {
  int n = 0;  // dimension of the base locus X in P^r
  int r = 0;  // dimension of the source projective space (= dim Z)
  int a = 0;  // degree of the defining linear system upstairs
  int b = 0;  // degree of the inverse system
  int i = 0;  // Fano index of Z
  int m = 0;  // dimension of the second base locus Y in Z

  friend bool operator==(const TransformationType&,
                         const TransformationType&) = default;
};

// All admissible types for a base locus of dimension n (supported: 1..3),
// sorted by (-r, -a, b). Counts: n=1 -> 7 tuples in 3 families,
// n=2 -> 13 tuples in 5 families, n=3 -> 22 tuples in 8 families.
std::vector<TransformationType> enumerate_types(int n);

// The classical inequalities:
//   n+2 <= r <= 2n+2,       a <= min{ m+2, r/(r-n-1) },
//   b <= min{ n+1+i-r, (i-1)/(r-m-1) },
// plus: r = 2n+2 forces a = 2, and m = 0 forces (a, b, i) = (2, 1, r).
bool bounds_check(const TransformationType& t);

// Degree a b - 1 of the secant variety contracted by the transformation.
inline int secant_degree(const TransformationType& t) {
  return t.a * t.b - 1;
}

}  // namespace birat::numerology

#include "birat/exact.hpp"

#include <boost/multiprecision/integer.hpp>

namespace birat::exact {

Int binomial(const Int& n, unsigned k) {
  // Generalized falling-factorial binomial; exact at every step because
  // the running product of j consecutive integers is divisible by j!.
  Int num = 1;
  for (unsigned j = 1; j <= k; ++j) {
    num *= n - static_cast<int>(j) + 1;
    num /= static_cast<int>(j);
  }
  return num;
}

Int pow(const Int& a, unsigned e) {
  Int out = 1;
  for (unsigned j = 0; j < e; ++j) out *= a;
  return out;
}

Int integer_sqrt(const Int& s) {
  if (s < 0) throw std::domain_error("integer_sqrt of a negative value");
  return boost::multiprecision::sqrt(s);
}

std::optional<Int> exact_sqrt(const Int& s) {
  if (s < 0) return std::nullopt;
  Int root = boost::multiprecision::sqrt(s);
  if (root * root == s) return root;
  return std::nullopt;
}

std::vector<Int> quadratic_integer_roots(const Int& A, const Int& B,
                                         const Int& C) {
  std::vector<Int> roots;
  if (A == 0) {
    if (B == 0) {
      if (C == 0)
        throw std::domain_error(
            "quadratic_integer_roots: zero polynomial has every root");
      return roots;  // constant != 0
    }
    if (divides(-C, B)) roots.push_back(-C / B);
    return roots;
  }
  auto disc = exact_sqrt(B * B - 4 * A * C);
  if (!disc) return roots;
  const Int twoA = 2 * A;
  const Int plus = -B + *disc;
  const Int minus = -B - *disc;
  for (const Int& num : {plus, minus}) {
    if (divides(num, twoA)) roots.push_back(num / twoA);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool divides(const Int& num, const Int& den) {
  if (den == 0) return false;
  return num % den == 0;
}

Int exact_div(const Int& num, const Int& den, const char* what) {
  if (!divides(num, den)) {
    throw std::domain_error(std::string(what) + " is not an integer: " +
                            to_string(num) + "/" + to_string(den));
  }
  return num / den;
}

bool is_integer(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace birat::exact

#include "birat/numerology.hpp"

#include <algorithm>
#include <stdexcept>

namespace birat::numerology {

std::vector<TransformationType> enumerate_types(int n) {
  if (n < 1 || n > 3)
    throw std::domain_error("enumerate_types: supported dimensions are 1..3");

  std::vector<TransformationType> out;
  for (int r = n + 2; r <= 2 * n + 2; ++r) {
    const int cod = r - n - 1;  // codim X - 1
    for (int m = 0; m <= r - 2; ++m) {
      if ((m + 2) % cod != 0) continue;
      const int a = (m + 2) / cod;
      if (a < 2) continue;
      // i = (r+1) b - (r-n-1)(a b - 1) is increasing in b because
      // a (r-n-1) <= r < r+1; stop once the index exceeds dim Z + 1.
      for (int b = 1;; ++b) {
        const int i = (r + 1) * b - cod * (a * b - 1);
        if (i > r + 1) break;
        if (i < 1) continue;
        if (i * a - (r - m - 1) * (a * b - 1) != r + 1) continue;
        TransformationType t{n, r, a, b, i, m};
        if (bounds_check(t)) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TransformationType& x, const TransformationType& y) {
              if (x.r != y.r) return x.r > y.r;
              if (x.a != y.a) return x.a > y.a;
              return x.b < y.b;
            });
  return out;
}

bool bounds_check(const TransformationType& t) {
  const auto [n, r, a, b, i, m] = t;
  if (r < n + 2 || r > 2 * n + 2) return false;
  if (r == 2 * n + 2 && a != 2) return false;
  if (m == 0 && (a != 2 || b != 1 || i != r)) return false;
  // a <= min{ m+2, r/(r-n-1) }  and  b <= min{ n+1+i-r, (i-1)/(r-m-1) },
  // with the rational bounds compared exactly.
  if (a > m + 2) return false;
  if (a * (r - n - 1) > r) return false;
  if (b > n + 1 + i - r) return false;
  if (r - m - 1 <= 0) return false;
  if (b * (r - m - 1) > i - 1) return false;
  return true;
}

}  // namespace birat::numerology

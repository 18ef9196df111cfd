#include "birat/multisecant.hpp"

namespace birat::multisecant {

using exact::binomial;

namespace {

Int ipow(const Int& x, unsigned k) { return exact::pow(x, k); }

constexpr const char* kScrollP6 =
    "trisecant count is not enumerative for scrolls in P^6";
constexpr const char* kScrollP4 =
    "count is not enumerative for scrolls in P^4";

}  // namespace

SecantCount n2(const Int& d, const Int& g, const Int& K2, const Int& chi) {
  const Int num = d * d - 5 * d - 10 * (g - 1) - 2 * K2 + 12 * chi;
  return SecantCount{Rat(num, 2)};
}

SecantCount n3_6(const Int& d, const Int& g, const Int& K2, const Int& chi,
                 bool scroll) {
  const Int num = ipow(d, 3) - 12 * d * d +
                  d * (18 * chi - 18 * g - 3 * K2 + 50) -
                  12 * (10 * chi - 11 * g - 2 * K2 + 11);
  SecantCount out{Rat(num, 3)};
  if (scroll) {
    out.applicable = false;
    out.caveat = kScrollP6;
  }
  return out;
}

SecantCount n3_4(const Int& d, const Int& g, const Int& chi) {
  const Int num = 12 * chi + ipow(d, 3) - 6 * d * d + d * (11 - 6 * g) +
                  18 * (g - 1);
  return SecantCount{Rat(num, 6)};
}

SecantCount n4_4(const Int& d, const Int& g, const Int& chi) {
  const Int num = 8 * chi * (2 * d - 9) + ipow(d, 4) - 10 * ipow(d, 3) +
                  d * d * (35 - 8 * g) + 2 * d * (28 * g - 33) +
                  4 * (g * g - 25 * g + 24);
  return SecantCount{Rat(num, 8)};
}

SecantCount n5_4(const Int& d, const Int& g, const Int& chi, bool scroll) {
  const Int num = 24 * chi * (d * d - 12 * d - 2 * (g - 22)) + ipow(d, 5) -
                  16 * ipow(d, 4) + ipow(d, 3) * (95 - 12 * g) +
                  52 * d * d * (3 * g - 5) +
                  12 * d * (2 * g * g - 62 * g + 43) -
                  120 * (g * g - 11 * g + 10);
  SecantCount out{Rat(num, 24)};
  if (scroll) {
    out.applicable = false;
    out.caveat = kScrollP4;
  }
  return out;
}

SecantCount n6_4(const Int& d, const Int& g, const Int& chi,
                 const std::vector<int>& line_self_intersections,
                 bool scroll) {
  const Int num =
      288 * chi * chi +
      24 * chi * (2 * ipow(d, 3) - 39 * d * d + d * (355 - 12 * g) +
                  90 * (g - 16)) +
      ipow(d, 6) - 21 * ipow(d, 5) + ipow(d, 4) * (157 - 18 * g) +
      3 * ipow(d, 3) * (116 * g - 65) +
      2 * d * d * (36 * g * g - 1431 * g - 1663) -
      12 * d * (72 * g * g - 1033 * g - 774) -
      24 * (ipow(g, 3) - 111 * g * g + 854 * g - 744);
  Rat value(num, 144);
  for (int l : line_self_intersections)
    if (l >= -1) value -= binomial(Int(7 + l), 6);
  SecantCount out{value};
  if (scroll) {
    out.applicable = false;
    out.caveat = kScrollP4;
  }
  return out;
}

}  // namespace birat::multisecant

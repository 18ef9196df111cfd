#include "birat/chern.hpp"

#include <stdexcept>

namespace birat::chern {

using exact::binomial;
using exact::pow;

std::vector<Int> segre_curve(const Int& d, const Int& g, int r) {
  return {d, 2 - 2 * g - (r + 1) * d};
}

std::vector<Int> segre_surface(const Int& d, const Int& g, const Int& K2,
                               const Int& chi, int r) {
  const Int c2 = noether_c2(chi, K2);
  return {d, 2 - 2 * g - r * d,
          c2 - (r + 1) * (2 - 2 * g) + binomial(r + 1, 2) * d};
}

std::vector<Int> segre_threefold(const Int& d, const Int& g, const Int& c2S,
                                 const Int& c3X, int r) {
  return {d, 2 - 2 * g - (r - 1) * d,
          c2S - r * (2 - 2 * g) + binomial(r, 2) * d,
          c3X - (r + 1) * c2S + binomial(r + 1, 2) * (2 - 2 * g) -
              binomial(r + 1, 3) * d};
}

Int noether_c2(const Int& chi, const Int& K2) { return 12 * chi - K2; }

Int c3_formula(const Int& d, const Int& g, const Int& chiS, const Int& chiX,
               const Int& KS2) {
  return 6 * KS2 + 24 * chiX - 72 * chiS - 2 * d * (d - 6 - g) +
         12 * (g - 1);
}

P5Relations p5_relations(const Int& d, const Int& g, const Int& chiS,
                         const Int& chiX) {
  P5Relations out;
  out.KX3 = -5 * d * d + d * (2 * g + 25) + 24 * (g - 1) - 36 * chiS -
            24 * chiX;
  const Int twoK = d * d - 5 * d - 10 * (g - 1) + 12 * chiS;
  out.KS2 = exact::exact_div(twoK, 2, "K_S^2 (double-point relation)");
  return out;
}

FundamentalValues fundamental_system(int n, int r, const Int& a,
                                     const std::vector<Int>& segre) {
  if (static_cast<int>(segre.size()) != n + 1)
    throw std::domain_error(
        "fundamental_system: need segre classes s_0 .. s_n");
  FundamentalValues v;
  v.z = pow(a, r);
  v.bz = pow(a, r - 1);
  v.b2z_minus_e = pow(a, r - 2);
  for (int i = 0; i <= n; ++i) {
    const Int& s = segre[n - i];
    v.z -= binomial(r, i) * pow(a, i) * s;
    if (i >= 1) v.bz -= binomial(r - 1, i - 1) * pow(a, i - 1) * s;
    if (i >= 2) v.b2z_minus_e -= binomial(r - 2, i - 2) * pow(a, i - 2) * s;
  }
  return v;
}

}  // namespace birat::chern

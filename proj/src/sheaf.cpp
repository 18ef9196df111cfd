#include "birat/sheaf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace birat::sheaf {

using exact::binomial;

BundleTerm canonical(int r, int p, int twist, int mult) {
  if (p < 0 || p > r)
    throw std::domain_error("bundle term: exterior power outside 0..r");
  if (mult < 1) throw std::domain_error("bundle term: multiplicity < 1");
  if (p == r) {  // Omega^r(t) = O(t - r - 1)
    p = 0;
    twist -= r + 1;
  }
  return BundleTerm{p, twist, mult};
}

BundleTerm dualize(int r, const BundleTerm& term) {
  // (Omega^p(t))^* = Omega^{r-p}(r + 1 - t) via the perfect pairing
  // Omega^p x Omega^{r-p} -> Omega^r = O(-r-1).
  return canonical(r, r - term.p, r + 1 - term.twist, term.mult);
}

Int term_rank(int r, const BundleTerm& term) {
  return binomial(r, term.p) * term.mult;
}

Int chi_omega(int r, int p, const Int& t) {
  // Truncated Koszul resolution of Omega^p by Lambda^p O(-1)^{r+1}:
  // chi(Omega^p(t)) = sum_{j=0}^p (-1)^{p-j} C(r+1, j) chi(O(t-j)).
  Int out = 0;
  for (int j = 0; j <= p; ++j) {
    const Int chiO = binomial(t - j + r, static_cast<unsigned>(r));
    const Int c = binomial(r + 1, j) * chiO;
    out += ((p - j) % 2 == 0) ? c : -c;
  }
  return out;
}

namespace {

Int chi_side(int r, const std::vector<BundleTerm>& side, const Int& t) {
  Int out = 0;
  for (const auto& term : side)
    out += term.mult * chi_omega(r, term.p, t + term.twist);
  return out;
}

}  // namespace

Int chi_ideal(const SheafResolution& res, const Int& t) {
  return chi_side(res.r, res.right, t) - chi_side(res.r, res.left, t);
}

Int chi_structure(const SheafResolution& res, const Int& t) {
  return binomial(t + res.r, static_cast<unsigned>(res.r)) -
         chi_ideal(res, t);
}

HilbertProfile hilbert_from_resolution(const SheafResolution& res) {
  const int r = res.r;
  // chi(O_X(t)) is a polynomial of degree dim X; read dim, degree, genus
  // and chi(O_X) off exact finite differences.
  std::vector<Int> v;
  v.reserve(r + 1);
  for (int t = 0; t <= r; ++t) v.push_back(chi_structure(res, t));

  // Forward-difference table at t = 0; the degree is the largest k with a
  // non-vanishing k-th difference.
  std::vector<std::vector<Int>> diff{v};
  for (int k = 1; k <= r; ++k) {
    std::vector<Int> next;
    for (std::size_t j = 0; j + 1 < diff.back().size(); ++j)
      next.push_back(diff.back()[j + 1] - diff.back()[j]);
    diff.push_back(std::move(next));
  }
  int dim = -1;
  for (int k = r; k >= 0; --k) {
    if (diff[k][0] != 0) {
      dim = k;
      break;
    }
  }
  if (dim < 0)
    throw std::domain_error("resolution yields chi(O_X) identically zero");
  if (dim >= r)
    throw std::domain_error(
        "resolution does not cut out a proper subvariety (codimension 0)");

  HilbertProfile out;
  out.dim = dim;
  out.codim = r - dim;
  out.d = diff[dim][0];  // leading coefficient * dim! = degree
  out.chi = v[0];
  // Curve section: chi(O_C(t)) is the (dim-1)-fold backward difference of
  // chi(O_X(t)); at t = 0 it equals d*0 + 1 - g.
  Int chiC0 = 0;
  for (int j = 0; j <= dim - 1; ++j) {
    const Int term = binomial(dim - 1, j) * chi_structure(res, Int(-j));
    chiC0 += (j % 2 == 0) ? term : -term;
  }
  out.g = 1 - chiC0;
  return out;
}

namespace {

// Multiset view keyed by (p, twist) for cancellation and comparison.
std::map<std::pair<int, int>, int> multiset_of(
    const std::vector<BundleTerm>& side) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& t : side) m[{t.p, t.twist}] += t.mult;
  return m;
}

std::vector<BundleTerm> to_terms(
    const std::map<std::pair<int, int>, int>& m) {
  std::vector<BundleTerm> out;
  for (const auto& [key, mult] : m)
    if (mult > 0) out.push_back(BundleTerm{key.first, key.second, mult});
  // Deterministic order: higher exterior power first, then higher twist.
  std::sort(out.begin(), out.end(),
            [](const BundleTerm& a, const BundleTerm& b) {
              if (a.p != b.p) return a.p > b.p;
              return a.twist > b.twist;
            });
  return out;
}

}  // namespace

LiaisonResult liaison_resolution(const SheafResolution& res, int p, int q) {
  if (p < 1 || q < 1)
    throw std::domain_error("liaison_resolution: degrees must be positive");
  const int r = res.r;
  std::vector<BundleTerm> left, right;
  for (const auto& t : res.right) {
    BundleTerm d = dualize(r, t);
    d.twist -= p + q;
    left.push_back(canonical(r, d.p, d.twist, d.mult));
  }
  for (const auto& t : res.left) {
    BundleTerm d = dualize(r, t);
    d.twist -= p + q;
    right.push_back(canonical(r, d.p, d.twist, d.mult));
  }
  right.push_back(canonical(r, 0, -p, 1));
  right.push_back(canonical(r, 0, -q, 1));

  auto lm = multiset_of(left);
  auto rm = multiset_of(right);
  for (auto& [key, mult] : lm) {
    auto it = rm.find(key);
    if (it == rm.end()) continue;
    const int c = std::min(mult, it->second);
    mult -= c;
    it->second -= c;
  }

  LiaisonResult out;
  out.res = SheafResolution{r, to_terms(lm), to_terms(rm)};
  std::ostringstream e1, e2;
  e1 << "h^1 of the injecting bundle twisted by " << p << " vanishes";
  e2 << "h^1 of the injecting bundle twisted by " << q << " vanishes";
  out.assumptions = {e1.str()};
  if (q != p) out.assumptions.push_back(e2.str());
  return out;
}

std::string to_string(const BundleTerm& term) {
  std::ostringstream os;
  if (term.p == 0)
    os << "O(" << term.twist << ")";
  else
    os << "Om" << term.p << "(" << term.twist << ")";
  if (term.mult != 1) os << "^" << term.mult;
  return os.str();
}

std::string to_string(const SheafResolution& res) {
  std::ostringstream os;
  auto side = [&os](const std::vector<BundleTerm>& terms) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j) os << " + ";
      os << to_string(terms[j]);
    }
  };
  side(res.left);
  os << " -> ";
  side(res.right);
  return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

int parse_int(const std::string& s, std::size_t& pos, const char* what) {
  skip_ws(s, pos);
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::runtime_error(std::string("expected ") + what +
                             " in sheaf term near '" + s.substr(start) + "'");
  return std::stoi(s.substr(start, pos - start));
}

BundleTerm parse_term(const std::string& s, std::size_t& pos, int r) {
  skip_ws(s, pos);
  int p = 0;
  bool tangent = false;
  if (s.compare(pos, 2, "Om") == 0) {
    pos += 2;
    p = parse_int(s, pos, "exterior power");
  } else if (pos < s.size() && s[pos] == 'T') {
    pos += 1;
    tangent = true;
  } else if (pos < s.size() && s[pos] == 'O') {
    pos += 1;
  } else {
    throw std::runtime_error("expected sheaf term (O / Om<p> / T) near '" +
                             s.substr(pos) + "'");
  }
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != '(')
    throw std::runtime_error("expected '(' after sheaf kind");
  ++pos;
  int twist = parse_int(s, pos, "twist");
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != ')')
    throw std::runtime_error("expected ')' after twist");
  ++pos;
  int mult = 1;
  skip_ws(s, pos);
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    mult = parse_int(s, pos, "multiplicity");
  }
  if (tangent) {  // T(t) = Omega^{r-1}(t + r + 1)
    p = r - 1;
    twist += r + 1;
  }
  return canonical(r, p, twist, mult);
}

}  // namespace

std::vector<BundleTerm> parse_terms(const std::string& text, int r) {
  std::vector<BundleTerm> out;
  std::size_t pos = 0;
  for (;;) {
    out.push_back(parse_term(text, pos, r));
    skip_ws(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] != '+')
      throw std::runtime_error("expected '+' between sheaf terms near '" +
                               text.substr(pos) + "'");
    ++pos;
  }
  return out;
}

SheafResolution parse_resolution(const std::string& text, int r) {
  const auto arrow = text.find("->");
  if (arrow == std::string::npos)
    throw std::runtime_error("resolution needs 'left -> right': " + text);
  SheafResolution res;
  res.r = r;
  res.left = parse_terms(text.substr(0, arrow), r);
  res.right = parse_terms(text.substr(arrow + 2), r);
  return res;
}

}  // namespace birat::sheaf

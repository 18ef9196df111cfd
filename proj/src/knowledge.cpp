#include "birat/knowledge.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace birat::knowledge {

// Generated at build time from data/knowledge.txt.
const char* embedded_knowledge_text();

namespace {

template <class... A>
std::string cat(A&&... a) {
  std::ostringstream os;
  (os << ... << a);
  return os.str();
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

const std::set<std::string>& allowed_invariant_keys() {
  static const std::set<std::string> keys{
      "n", "r", "a",  "b",   "i",   "m",    "d",    "g",
      "z", "e", "K2", "chi", "KS2", "chiS", "chiX", "KX3"};
  return keys;
}

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = s[0] == '-' ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::smooth:
      return "smooth";
    case Verdict::singular_target:
      return "singular target";
    case Verdict::nonexistent:
      return "nonexistent";
    case Verdict::open_case:
      return "open";
  }
  return "?";
}

std::optional<std::string> Record::theorem_label() const {
  if (description.rfind("thm:", 0) != 0) return std::nullopt;
  const auto colon = description.find(':', 4);
  if (colon == std::string::npos || colon == 4) return std::nullopt;
  return description.substr(4, colon - 4);
}

std::string Record::description_body() const {
  if (theorem_label()) {
    const auto colon = description.find(':', 4);
    return trim(description.substr(colon + 1));
  }
  return description;
}

KnowledgeBase KnowledgeBase::parse(const std::string& text,
                                   const std::string& origin) {
  KnowledgeBase kb;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    return std::runtime_error(cat(origin, ":", lineno, ": ", why));
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto pos = s.find('|', start);
      if (pos == std::string::npos) {
        fields.push_back(trim(s.substr(start)));
        break;
      }
      fields.push_back(trim(s.substr(start, pos - start)));
      start = pos + 1;
    }
    if (fields.size() != 6)
      throw fail(cat("expected 6 '|'-separated fields (case | verdict | "
                     "invariants | resolution | description | citation), "
                     "got ",
                     fields.size()));

    Record rec;
    rec.line = lineno;
    rec.case_id = fields[0];
    if (rec.case_id.empty()) throw fail("empty case id");

    if (fields[1] == "smooth")
      rec.verdict = Verdict::smooth;
    else if (fields[1] == "singular_Z")
      rec.verdict = Verdict::singular_target;
    else if (fields[1] == "nonexistent")
      rec.verdict = Verdict::nonexistent;
    else if (fields[1] == "open")
      rec.verdict = Verdict::open_case;
    else
      throw fail(cat("unknown verdict '", fields[1],
                     "' (expected smooth | singular_Z | nonexistent | "
                     "open)"));

    if (fields[2] != "-") {
      std::istringstream inv(fields[2]);
      std::string item;
      while (std::getline(inv, item, ';')) {
        item = trim(item);
        if (item.empty()) throw fail("empty invariant entry");
        const auto eq = item.find('=');
        if (eq == std::string::npos)
          throw fail(cat("invariant '", item, "' is not of the form "
                                              "key=value"));
        const std::string key = trim(item.substr(0, eq));
        const std::string value = trim(item.substr(eq + 1));
        if (!allowed_invariant_keys().count(key))
          throw fail(cat("unknown invariant key '", key, "'"));
        if (!looks_like_integer(value))
          throw fail(cat("invariant ", key, " has non-integer value '",
                         value, "'"));
        if (rec.invariants.count(key))
          throw fail(cat("invariant ", key, " given twice"));
        rec.invariants.emplace(key, Int(value));
      }
    }

    if (fields[3] != "-") {
      const std::string& res = fields[3];
      if (res.size() < 4 || res[0] != 'P')
        throw fail("resolution must start with \"P<r>:\"");
      const auto colon = res.find(':');
      if (colon == std::string::npos)
        throw fail("resolution must start with \"P<r>:\"");
      const std::string rtext = trim(res.substr(1, colon - 1));
      if (!looks_like_integer(rtext) || rtext[0] == '-')
        throw fail(cat("bad ambient dimension '", rtext,
                       "' in resolution"));
      const int r = std::stoi(rtext);
      try {
        rec.resolution = sheaf::parse_resolution(res.substr(colon + 1), r);
      } catch (const std::exception& ex) {
        throw fail(cat("bad resolution: ", ex.what()));
      }
    }

    rec.description = fields[4];
    if (rec.description.empty()) throw fail("empty description");
    rec.citation = fields[5];
    if (rec.citation.empty()) throw fail("empty citation");
    if (rec.verdict == Verdict::smooth && rec.case_id != "quadric.family" &&
        !rec.theorem_label())
      throw fail(cat("smooth record ", rec.case_id,
                     " lacks a \"thm:<label>:\" description prefix"));

    if (kb.index_.count(rec.case_id))
      throw fail(cat("duplicate case id '", rec.case_id, "'"));
    kb.index_[rec.case_id] = kb.records_.size();
    kb.records_.push_back(std::move(rec));
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(cat("cannot open knowledge file: ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const KnowledgeBase& KnowledgeBase::builtin() {
  static const KnowledgeBase kb = parse(embedded_knowledge_text(),
                                        "builtin");
  return kb;
}

const Record* KnowledgeBase::find(const std::string& case_id) const {
  const auto it = index_.find(case_id);
  return it == index_.end() ? nullptr : &records_[it->second];
}

namespace {

std::optional<Int> candidate_value(const solver::Candidate& c,
                                   const std::string& key) {
  if (key == "n") return Int(c.type.n);
  if (key == "r") return Int(c.type.r);
  if (key == "a") return Int(c.type.a);
  if (key == "b") return Int(c.type.b);
  if (key == "i") return Int(c.type.i);
  if (key == "m") return Int(c.type.m);
  if (key == "d") return c.d;
  if (key == "g") return c.g;
  if (key == "z") return c.z;
  if (key == "e") return c.e;
  auto opt = [](const std::optional<Int>& v) {
    return v ? std::optional<Int>(*v) : std::nullopt;
  };
  if (key == "K2") return opt(c.K2);
  if (key == "chi") return opt(c.chi);
  if (key == "KS2") return opt(c.KS2);
  if (key == "chiS") return opt(c.chiS);
  if (key == "chiX") return opt(c.chiX);
  if (key == "KX3") return opt(c.KX3);
  return std::nullopt;
}

void cross_check(const Record& rec, const solver::Candidate& c) {
  for (const auto& [key, value] : rec.invariants) {
    const auto have = candidate_value(c, key);
    if (!have)
      throw std::runtime_error(
          cat("ledger record ", rec.case_id, " pins invariant ", key,
              ", which the solver does not compute for branch ", c.branch));
    if (*have != value)
      throw std::runtime_error(cat("invariant drift for ", rec.case_id,
                                   ": ledger has ", key, " = ", value,
                                   ", solver derived ", *have));
  }
}

// Value of an uppercase roman numeral; -1 when the text is not one.
int roman_value(const std::string& text) {
  if (text.empty()) return -1;
  auto digit = [](char ch) {
    switch (ch) {
      case 'I': return 1;
      case 'V': return 5;
      case 'X': return 10;
      case 'L': return 50;
      case 'C': return 100;
      default: return -1;
    }
  };
  int total = 0, prev = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    const int v = digit(*it);
    if (v < 0) return -1;
    if (v < prev)
      total -= v;
    else {
      total += v;
      prev = v;
    }
  }
  return total;
}

}  // namespace

ClassificationReport classify(int n, const KnowledgeBase& kb) {
  ClassificationReport rep;
  rep.n = n;

  std::vector<std::pair<std::string, std::vector<solver::Candidate>>>
      grouped;
  if (n == 1) {
    grouped.emplace_back("curves (r = 4 and r = 3)", solver::solve_n1().rows);
    rep.main_section = 0;
  } else if (n == 2) {
    grouped.emplace_back("surfaces (r = 6, 5, 4)", solver::solve_n2().rows);
    rep.main_section = 0;
  } else if (n == 3) {
    const auto easy = solver::solve_n3_easy();
    const auto a5 = solver::solve_n3_a5(1);
    const auto a4 = solver::solve_n3_a4();
    std::vector<solver::Candidate> r7, r6, r5;
    for (const auto& c : easy.rows) {
      if (c.type.r == 7) r7.push_back(c);
      if (c.type.r == 6) r6.push_back(c);
    }
    r5.insert(r5.end(), a5.rows.begin(), a5.rows.end());
    r5.insert(r5.end(), a4.rows.begin(), a4.rows.end());
    for (const auto& c : easy.rows)
      if (c.type.r == 5) r5.push_back(c);
    grouped.emplace_back("r = 7", std::move(r7));
    grouped.emplace_back("r = 6", std::move(r6));
    grouped.emplace_back("r = 5", std::move(r5));
    rep.main_section = 2;
  } else {
    throw std::domain_error("classification is available for n = 1, 2, 3");
  }

  for (auto& [title, rows] : grouped) {
    Section sec;
    sec.title = title;
    for (auto& c : rows) {
      const Record* rec = kb.find(c.case_id);
      if (!rec)
        throw std::runtime_error(
            cat("no ledger record for solver row ", c.case_id, " (branch ",
                c.branch, ", d = ", c.d, ")"));
      cross_check(*rec, c);
      switch (rec->verdict) {
        case Verdict::smooth: {
          const auto label = rec->theorem_label();
          if (!label)
            throw std::runtime_error(cat("smooth record ", rec->case_id,
                                         " lacks a theorem label"));
          TheoremRow row;
          row.label = *label;
          row.case_id = c.case_id;
          row.row = c;
          row.description = rec->description_body();
          row.citation = rec->citation;
          row.has_resolution = rec->resolution.has_value();
          sec.rows.push_back(std::move(row));
          break;
        }
        case Verdict::singular_target:
        case Verdict::nonexistent:
          rep.excluded.push_back({c.case_id, rec->verdict, c,
                                  rec->description_body(), rec->citation});
          break;
        case Verdict::open_case:
          throw std::runtime_error(cat("ledger record ", rec->case_id,
                                       " is marked open but matches a "
                                       "solver row"));
      }
    }
    rep.sections.push_back(std::move(sec));
  }

  // The main section must carry labels whose roman tails run I, II, III...
  const auto& main = rep.sections[rep.main_section];
  for (std::size_t k = 0; k < main.rows.size(); ++k) {
    const std::string& lbl = main.rows[k].label;
    const auto dot = lbl.rfind('.');
    const std::string tail =
        dot == std::string::npos ? lbl : lbl.substr(dot + 1);
    if (roman_value(tail) != static_cast<int>(k) + 1)
      throw std::runtime_error(cat("theorem labels out of order: position ",
                                   k + 1, " holds label ", lbl));
  }

  const std::string open_prefix = cat("open.n", n, ".");
  for (const auto& rec : kb.records())
    if (rec.verdict == Verdict::open_case &&
        rec.case_id.rfind(open_prefix, 0) == 0)
      rep.open_families.push_back(
          {rec.case_id, rec.description, rec.citation});
  return rep;
}

std::vector<CorollaryRow> corollary_r_n_plus_2(const KnowledgeBase& kb,
                                               bool expand_parametric) {
  std::vector<CorollaryRow> out;
  std::vector<TheoremRow> quadric_instances;
  for (int n = 1; n <= 3; ++n) {
    const auto rep = classify(n, kb);
    for (const auto& row : rep.sections[rep.main_section].rows) {
      if (row.row.type.r != n + 2) continue;
      if (row.row.type.m == 0) {
        // An instance of the parametric quadric-base family: counted once,
        // below.
        quadric_instances.push_back(row);
        continue;
      }
      out.push_back({row.label, row.case_id, row.description, row.citation});
    }
  }
  const Record* family = kb.find("quadric.family");
  if (!family)
    throw std::runtime_error(
        "ledger lacks the parametric record quadric.family");
  if (!expand_parametric) {
    out.push_back({"parametric", family->case_id, family->description_body(),
                   family->citation});
  } else {
    for (const auto& row : quadric_instances)
      out.push_back({row.label, row.case_id, row.description, row.citation});
    out.push_back({"parametric", family->case_id,
                   "the family continues identically for every r >= 3 (one "
                   "type in each dimension)",
                   family->citation});
  }
  return out;
}

std::vector<ResolutionCheck> verify_resolutions(const KnowledgeBase& kb) {
  std::vector<ResolutionCheck> out;
  for (const auto& rec : kb.records()) {
    if (!rec.resolution) continue;
    ResolutionCheck chk;
    chk.case_id = rec.case_id;
    chk.resolution = *rec.resolution;
    const int r = rec.resolution->r;
    const char* chi_key = r == 4 ? "chi" : r == 5 ? "chiX" : nullptr;
    if (!chi_key) {
      chk.detail = cat("no checker for resolutions over P^", r);
      out.push_back(std::move(chk));
      continue;
    }
    const auto d_it = rec.invariants.find("d");
    const auto g_it = rec.invariants.find("g");
    const auto c_it = rec.invariants.find(chi_key);
    if (d_it == rec.invariants.end() || g_it == rec.invariants.end() ||
        c_it == rec.invariants.end()) {
      chk.detail = cat("record lacks one of the invariants d, g, ", chi_key);
      out.push_back(std::move(chk));
      continue;
    }
    chk.expect_d = d_it->second;
    chk.expect_g = g_it->second;
    chk.expect_chi = c_it->second;
    try {
      chk.computed = sheaf::hilbert_from_resolution(*rec.resolution);
    } catch (const std::exception& ex) {
      chk.detail = cat("Hilbert extraction failed: ", ex.what());
      out.push_back(std::move(chk));
      continue;
    }
    chk.pass = chk.computed.codim == 2 && chk.computed.d == chk.expect_d &&
               chk.computed.g == chk.expect_g &&
               chk.computed.chi == chk.expect_chi;
    if (chk.pass)
      chk.detail = cat("profile (d, g, chi) = (", chk.computed.d, ", ",
                       chk.computed.g, ", ", chk.computed.chi,
                       ") in codimension 2 matches the ledger");
    else
      chk.detail = cat("computed (d, g, chi, codim) = (", chk.computed.d,
                       ", ", chk.computed.g, ", ", chk.computed.chi, ", ",
                       chk.computed.codim, "), ledger has (", chk.expect_d,
                       ", ", chk.expect_g, ", ", chk.expect_chi, ", 2)");
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace birat::knowledge

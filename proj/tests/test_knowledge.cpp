#include "doctest.h"

#include "birat/exact.hpp"
#include "birat/knowledge.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace birat::knowledge;
using birat::exact::Int;

namespace {

// Parse and return the error message (empty when parsing succeeded).
std::string parse_error(const std::string& text) {
  try {
    KnowledgeBase::parse(text, "t");
    return {};
  } catch (const std::runtime_error& ex) {
    return ex.what();
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// A ledger for the ten curve rows: every row smooth, labeled c.I .. c.X.
std::vector<std::string> curve_ledger_lines() {
  const char* ids[] = {"n1.i",  "n1.ii",  "n1.iii", "n1.iv", "n1.v",
                       "n1.vi", "n1.vii", "n1.viii", "n1.ix", "n1.x"};
  const char* romans[] = {"I",  "II",  "III", "IV", "V",
                          "VI", "VII", "VIII", "IX", "X"};
  std::vector<std::string> lines;
  for (int k = 0; k < 10; ++k)
    lines.push_back(std::string(ids[k]) + " | smooth | - | - | thm:c." +
                    romans[k] + ": a curve | Semple");
  return lines;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::vector<std::string> labels_of(const Section& sec) {
  std::vector<std::string> out;
  for (const auto& row : sec.rows) out.push_back(row.label);
  return out;
}

std::vector<std::string> cases_of(const Section& sec) {
  std::vector<std::string> out;
  for (const auto& row : sec.rows) out.push_back(row.case_id);
  return out;
}

}  // namespace

TEST_CASE("builtin ledger loads and indexes") {
  const auto& kb = KnowledgeBase::builtin();
  CHECK(kb.records().size() == 57);

  const Record* rec = kb.find("n2.xi");
  REQUIRE(rec != nullptr);
  CHECK(rec->verdict == Verdict::smooth);
  REQUIRE(rec->resolution.has_value());
  CHECK(rec->resolution->r == 4);
  CHECK(rec->theorem_label() == std::string("n2.VII"));
  CHECK(contains(rec->description_body(), "K3"));
  CHECK(!contains(rec->description_body(), "thm:"));
  CHECK(rec->invariants.at("d") == 9);
  CHECK(rec->invariants.at("K2") == -5);

  // The parametric family is the one smooth record without a theorem
  // label: it stands for one type in every dimension, not a single row.
  const Record* fam = kb.find("quadric.family");
  REQUIRE(fam != nullptr);
  CHECK(fam->verdict == Verdict::smooth);
  CHECK(!fam->theorem_label().has_value());

  CHECK(kb.find("no.such.case") == nullptr);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(Verdict::smooth)) == "smooth");
  CHECK(std::string(to_string(Verdict::singular_target)) ==
        "singular target");
  CHECK(std::string(to_string(Verdict::nonexistent)) == "nonexistent");
  CHECK(std::string(to_string(Verdict::open_case)) == "open");
}

TEST_CASE("theorem label extraction") {
  Record rec;
  rec.description = "thm:n2.VII: a K3 surface";
  CHECK(rec.theorem_label() == std::string("n2.VII"));
  CHECK(rec.description_body() == "a K3 surface");
  rec.description = "no prefix here";
  CHECK(!rec.theorem_label().has_value());
  CHECK(rec.description_body() == "no prefix here");
  rec.description = "thm:: empty label";
  CHECK(!rec.theorem_label().has_value());
}

TEST_CASE("ledger grammar: well-formed input") {
  const auto kb = KnowledgeBase::parse(
      "# a comment, then a blank line\n"
      "\n"
      "x.i | singular_Z | d=4; g=0; K2=8 | - | cone target | Semple\n"
      "x.ii | open | - | - | unresolved family | Semple\n"
      "x.iii | smooth | d=9 | P5: O(-5)^5 -> Om1(-3) + O(-4) | "
      "thm:x.I: a threefold | Mukai\n",
      "mini");
  CHECK(kb.records().size() == 3);
  const Record* a = kb.find("x.i");
  REQUIRE(a != nullptr);
  CHECK(a->verdict == Verdict::singular_target);
  CHECK(a->line == 3);  // comments and blank lines still count
  CHECK(a->invariants.size() == 3);
  CHECK(a->invariants.at("K2") == 8);
  CHECK(!a->resolution.has_value());
  CHECK(kb.find("x.ii")->verdict == Verdict::open_case);
  const Record* c = kb.find("x.iii");
  REQUIRE(c->resolution.has_value());
  CHECK(c->resolution->r == 5);
  CHECK(c->resolution->left.size() == 1);
  CHECK(c->resolution->right.size() == 2);
}

TEST_CASE("ledger grammar: malformed input carries origin and line") {
  // Field count.
  CHECK(contains(parse_error("x | smooth | - | -"),
                 "t:1: expected 6 '|'-separated fields"));
  // Line numbers skip past comments.
  CHECK(contains(parse_error("# comment\n\nx | smooth"), "t:3:"));
  // Verdict.
  CHECK(contains(parse_error("x | maybe | - | - | d | c"),
                 "unknown verdict 'maybe'"));
  // Invariants.
  CHECK(contains(parse_error("x | open | foo=1 | - | d | c"),
                 "unknown invariant key 'foo'"));
  CHECK(contains(parse_error("x | open | d=abc | - | d | c"),
                 "invariant d has non-integer value 'abc'"));
  CHECK(contains(parse_error("x | open | d=1;d=2 | - | d | c"),
                 "invariant d given twice"));
  CHECK(contains(parse_error("x | open | d: 1 | - | d | c"),
                 "not of the form key=value"));
  // Resolutions.
  CHECK(contains(parse_error("x | open | - | O(-5) -> O(-4) | d | c"),
                 "resolution must start with \"P<r>:\""));
  CHECK(contains(parse_error("x | open | - | P5: O(-5) >> O(-4) | d | c"),
                 "bad resolution"));
  // Description and citation must be present.
  CHECK(contains(parse_error("x | open | - | - | | c"),
                 "empty description"));
  CHECK(contains(parse_error("x | open | - | - | d | "), "empty citation"));
  // A smooth verdict requires a theorem label...
  CHECK(contains(parse_error("x | smooth | - | - | no label | c"),
                 "lacks a \"thm:<label>:\" description prefix"));
  // ...except on the parametric family record.
  CHECK(parse_error("quadric.family | smooth | - | - | no label | c")
            .empty());
  // Duplicates.
  CHECK(contains(
      parse_error("x | open | - | - | d | c\nx | open | - | - | d | c"),
      "t:2: duplicate case id 'x'"));
}

TEST_CASE("load_file round-trip and missing file") {
  namespace fs = std::filesystem;
  const auto path = fs::temp_directory_path() / "ledger_roundtrip.txt";
  {
    std::ofstream out(path);
    out << "x.i | open | - | - | a family | Semple\n";
  }
  const auto kb = KnowledgeBase::load_file(path.string());
  CHECK(kb.records().size() == 1);
  CHECK(kb.find("x.i") != nullptr);
  fs::remove(path);
  CHECK_THROWS_WITH_AS(KnowledgeBase::load_file("/no/such/ledger.txt"),
                       "cannot open knowledge file: /no/such/ledger.txt",
                       std::runtime_error);
}

TEST_CASE("classification of curves: eight types") {
  const auto rep = classify(1, KnowledgeBase::builtin());
  CHECK(rep.n == 1);
  REQUIRE(rep.sections.size() == 1);
  CHECK(rep.main_section == 0);
  CHECK(rep.sections[0].title == "curves (r = 4 and r = 3)");
  CHECK(rep.theorem_row_count() == 8);
  CHECK(labels_of(rep.sections[0]) ==
        std::vector<std::string>{"n1.I", "n1.II", "n1.III", "n1.IV", "n1.V",
                                 "n1.VI", "n1.VII", "n1.VIII"});
  CHECK(cases_of(rep.sections[0]) ==
        std::vector<std::string>{"n1.i", "n1.ii", "n1.iv", "n1.v", "n1.vi",
                                 "n1.viii", "n1.ix", "n1.x"});
  REQUIRE(rep.excluded.size() == 2);
  CHECK(rep.excluded[0].case_id == "n1.iii");
  CHECK(rep.excluded[0].verdict == Verdict::singular_target);
  CHECK(rep.excluded[1].case_id == "n1.vii");
  CHECK(rep.open_families.empty());
}

TEST_CASE("classification of surfaces: thirteen types") {
  const auto rep = classify(2, KnowledgeBase::builtin());
  REQUIRE(rep.sections.size() == 1);
  CHECK(rep.sections[0].title == "surfaces (r = 6, 5, 4)");
  CHECK(rep.theorem_row_count() == 13);
  CHECK(cases_of(rep.sections[0]) ==
        std::vector<std::string>{"n2.i", "n2.ii", "n2.iv", "n2.viii",
                                 "n2.ix", "n2.x", "n2.xi", "n2.xii",
                                 "n2.xv", "n2.xvi", "n2.xvii", "n2.xix",
                                 "n2.xx"});
  CHECK(rep.sections[0].rows.front().label == "n2.I");
  CHECK(rep.sections[0].rows.back().label == "n2.XIII");
  // The one stored resolution among the surface rows sits on the K3 case.
  int stored = 0;
  for (const auto& row : rep.sections[0].rows)
    if (row.has_resolution) {
      ++stored;
      CHECK(row.case_id == "n2.xi");
    }
  CHECK(stored == 1);
  REQUIRE(rep.excluded.size() == 7);
  CHECK(rep.excluded[0].case_id == "n2.iii");
  CHECK(rep.excluded[6].case_id == "n2.xviii");
  CHECK(rep.open_families.empty());
}

TEST_CASE("classification of threefolds: seven types and open families") {
  const auto rep = classify(3, KnowledgeBase::builtin());
  REQUIRE(rep.sections.size() == 3);
  CHECK(rep.sections[0].title == "r = 7");
  CHECK(rep.sections[1].title == "r = 6");
  CHECK(rep.sections[2].title == "r = 5");
  CHECK(rep.main_section == 2);
  CHECK(rep.sections[0].rows.size() == 3);
  CHECK(labels_of(rep.sections[0]) ==
        std::vector<std::string>{"n3.easy.I.1", "n3.easy.I.2",
                                 "n3.easy.I.3"});
  CHECK(rep.sections[1].rows.size() == 1);
  CHECK(rep.sections[1].rows[0].label == "n3.easy.II");
  CHECK(rep.theorem_row_count() == 7);
  CHECK(labels_of(rep.sections[2]) ==
        std::vector<std::string>{"n3r5.I", "n3r5.II", "n3r5.III", "n3r5.IV",
                                 "n3r5.V", "n3r5.VI", "n3r5.VII"});
  CHECK(cases_of(rep.sections[2]) ==
        std::vector<std::string>{"5b.i", "5b.iv", "51.viii", "51.x",
                                 "4b.iii", "e3.v", "e3.vi"});
  // Every surviving r = 5 row but the quadric family carries a stored
  // resolution.
  for (const auto& row : rep.sections[2].rows)
    CHECK(row.has_resolution == (row.case_id != "e3.vi"));

  CHECK(rep.excluded.size() == 13);
  std::vector<std::string> excluded_cases;
  for (const auto& ex : rep.excluded) excluded_cases.push_back(ex.case_id);
  CHECK(excluded_cases ==
        std::vector<std::string>{"5b.ii", "5b.iii", "51.i", "51.ii",
                                 "51.iii", "51.iv", "51.v", "51.vi",
                                 "51.vii", "51.ix", "51.xi", "4b.i",
                                 "4b.ii"});
  // Verdict split: four candidates fail existence, nine have singular
  // targets.
  const auto nonexistent = std::count_if(
      rep.excluded.begin(), rep.excluded.end(), [](const ExcludedRow& ex) {
        return ex.verdict == Verdict::nonexistent;
      });
  CHECK(nonexistent == 4);

  REQUIRE(rep.open_families.size() == 2);
  CHECK(rep.open_families[0].family == "open.n3.r8");
  CHECK(rep.open_families[1].family == "open.n3.r6a3");

  CHECK_THROWS_AS(classify(4, KnowledgeBase::builtin()), std::domain_error);
  CHECK_THROWS_AS(classify(0, KnowledgeBase::builtin()), std::domain_error);
}

TEST_CASE("classification join errors") {
  auto lines = curve_ledger_lines();

  // A complete ledger classifies cleanly: ten smooth rows.
  const auto ok = classify(1, KnowledgeBase::parse(join(lines), "m"));
  CHECK(ok.theorem_row_count() == 10);
  CHECK(ok.excluded.empty());

  // Missing record.
  {
    auto cut = lines;
    cut.erase(cut.begin() + 2);  // drop n1.iii
    CHECK_THROWS_WITH_AS(
        classify(1, KnowledgeBase::parse(join(cut), "m")),
        "no ledger record for solver row n1.iii (branch projection, d = 4)",
        std::runtime_error);
  }
  // Invariant drift: the ledger pins d = 7 but the solver derives d = 5.
  {
    auto drift = lines;
    drift[0] = "n1.i | smooth | d=7 | - | thm:c.I: a curve | Semple";
    CHECK_THROWS_WITH_AS(
        classify(1, KnowledgeBase::parse(join(drift), "m")),
        "invariant drift for n1.i: ledger has d = 7, solver derived 5",
        std::runtime_error);
  }
  // Pinning an invariant the solver does not compute for this branch.
  {
    auto pin = lines;
    pin[0] = "n1.i | smooth | K2=0 | - | thm:c.I: a curve | Semple";
    CHECK_THROWS_WITH_AS(
        classify(1, KnowledgeBase::parse(join(pin), "m")),
        "ledger record n1.i pins invariant K2, which the solver does not "
        "compute for branch projection",
        std::runtime_error);
  }
  // An open verdict may not sit on a case the solvers actually produce.
  {
    auto open = lines;
    open[9] = "n1.x | open | - | - | left open | Semple";
    CHECK_THROWS_WITH_AS(classify(1, KnowledgeBase::parse(join(open), "m")),
                         "ledger record n1.x is marked open but matches a "
                         "solver row",
                         std::runtime_error);
  }
  // Labels must run I, II, III, ... down the main section.
  {
    auto swapped = lines;
    swapped[0] = "n1.i | smooth | - | - | thm:c.II: a curve | Semple";
    swapped[1] = "n1.ii | smooth | - | - | thm:c.I: a curve | Semple";
    CHECK_THROWS_WITH_AS(
        classify(1, KnowledgeBase::parse(join(swapped), "m")),
        "theorem labels out of order: position 1 holds label c.II",
        std::runtime_error);
  }
}

TEST_CASE("the r = n + 2 corollary: eighteen types") {
  const auto& kb = KnowledgeBase::builtin();
  const auto compact = corollary_r_n_plus_2(kb, false);
  REQUIRE(compact.size() == 18);
  CHECK(compact[0].source == "n1.IV");
  CHECK(compact[0].case_id == "n1.v");
  // 4 curve types, 7 surface types, 6 threefold types, then the family.
  CHECK(compact[3].source == "n1.VII");
  CHECK(compact[4].source == "n2.VI");
  CHECK(compact[10].source == "n2.XII");
  CHECK(compact[11].source == "n3r5.I");
  CHECK(compact[16].source == "n3r5.VI");
  CHECK(compact.back().source == "parametric");
  CHECK(compact.back().case_id == "quadric.family");

  const auto expanded = corollary_r_n_plus_2(kb, true);
  REQUIRE(expanded.size() == 21);
  // The three in-range instances of the family replace the parametric row.
  CHECK(expanded[17].source == "n1.VIII");
  CHECK(expanded[18].source == "n2.XIII");
  CHECK(expanded[19].source == "n3r5.VII");
  CHECK(expanded.back().source == "parametric");
  CHECK(expanded.back().description ==
        "the family continues identically for every r >= 3 (one type in "
        "each dimension)");
}

TEST_CASE("stored resolutions all reproduce their ledger profiles") {
  const auto checks = verify_resolutions(KnowledgeBase::builtin());
  REQUIRE(checks.size() == 13);
  std::vector<std::string> cases;
  for (const auto& chk : checks) {
    cases.push_back(chk.case_id);
    CHECK(chk.pass);
    CHECK(contains(chk.detail, "matches the ledger"));
    CHECK(chk.computed.codim == 2);
  }
  CHECK(cases == std::vector<std::string>{"n2.xi", "4b.iii", "5b.i", "5b.ii",
                                          "5b.iv", "51.iv", "51.v", "51.vi",
                                          "51.vii", "51.viii", "51.ix",
                                          "51.x", "e3.v"});
  // Spot value: the degree-13 threefold.
  const auto it = std::find(cases.begin(), cases.end(), "51.viii");
  const auto& chk = checks[it - cases.begin()];
  CHECK(chk.computed.d == 13);
  CHECK(chk.computed.g == 19);
  CHECK(chk.computed.chi == 1);
}

TEST_CASE("resolution verification failure modes") {
  // Ledger chi disagrees with the resolution.
  auto kb = KnowledgeBase::parse(
      "x.i | open | d=5; g=2; chiX=7 | P5: O(-4)^2 -> O(-2) + O(-3)^2 | "
      "quintic | Castelnuovo\n"
      "x.ii | open | d=5; chiX=1 | P5: O(-4)^2 -> O(-2) + O(-3)^2 | "
      "no genus | Castelnuovo\n"
      "x.iii | open | d=1; g=0; chi=1 | P6: O(-2) -> O(-1)^2 | "
      "unsupported ambient | Semple\n"
      "x.iv | open | d=1; g=0; chiX=1 | P5: O(-5) -> O(-5) | "
      "cancels to nothing | Semple\n",
      "m");
  const auto checks = verify_resolutions(kb);
  REQUIRE(checks.size() == 4);
  CHECK(!checks[0].pass);
  CHECK(contains(checks[0].detail,
                 "computed (d, g, chi, codim) = (5, 2, 1, 2)"));
  CHECK(contains(checks[0].detail, "ledger has (5, 2, 7, 2)"));
  CHECK(!checks[1].pass);
  CHECK(contains(checks[1].detail, "record lacks one of the invariants"));
  CHECK(!checks[2].pass);
  CHECK(contains(checks[2].detail, "no checker for resolutions over P^6"));
  CHECK(!checks[3].pass);
  CHECK(contains(checks[3].detail, "Hilbert extraction failed"));
}

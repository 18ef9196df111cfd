#pragma once

// The curated verdict ledger: one record per maximal-list row carrying the
// smooth / singular-target / nonexistent verdict, the row invariants (cross
// checked against the solver output), the stored ideal-sheaf resolution
// when one is known, a human-readable description, and the citation backing
// the verdict. Joining the ledger against the solver rows produces the
// classification theorems; records are also the input to the resolution
// verifier.
//
// File grammar (data/knowledge.txt, embedded into the library at build
// time): UTF-8, line oriented, '#' comments, six pipe-separated fields
//   case | verdict | invariants | resolution | description | citation
// invariants:  ';'-separated key=value integers, or '-'
// resolution:  "P<r>: <terms> -> <terms>" with the sheaf-term grammar, or
//              '-'
// verdict:     smooth | singular_Z | nonexistent | open
// Loading validates everything and reports errors with line numbers.

#include "birat/exact.hpp"
#include "birat/sheaf.hpp"
#include "birat/solver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace birat::knowledge {

using exact::Int;

enum class Verdict { smooth, singular_target, nonexistent, open_case };

const char* to_string(Verdict v);

struct Record {
  std::string case_id;
  Verdict verdict = Verdict::smooth;
  std::map<std::string, Int> invariants;
  std::optional<sheaf::SheafResolution> resolution;
  std::string description;
  std::string citation;
  int line = 0;

  // Smooth records carry a "thm:<label>:" prefix in the description; the
  // label orders and names the classification rows.
  std::optional<std::string> theorem_label() const;
  std::string description_body() const;  // description without the prefix
};

class KnowledgeBase {
 public:
  // Parse from a file / from text. Both throw std::runtime_error whose
  // message carries "<origin>:<line>: <reason>" on malformed input.
  static KnowledgeBase load_file(const std::string& path);
  static KnowledgeBase parse(const std::string& text,
                             const std::string& origin);
  // The records compiled in from data/knowledge.txt.
  static const KnowledgeBase& builtin();

  const Record* find(const std::string& case_id) const;
  const std::vector<Record>& records() const { return records_; }

 private:
  std::vector<Record> records_;
  std::map<std::string, std::size_t> index_;
};

// One surviving classification row.
struct TheoremRow {
  std::string label;  // "I", "II", ... within its section
  std::string case_id;
  solver::Candidate row;
  std::string description;
  std::string citation;
  bool has_resolution = false;
};

struct ExcludedRow {
  std::string case_id;
  Verdict verdict = Verdict::singular_target;
  solver::Candidate row;
  std::string description;
  std::string citation;
};

struct OpenFamily {
  std::string family;
  std::string note;
  std::string citation;
};

struct Section {
  std::string title;  // e.g. "r = 5"
  std::vector<TheoremRow> rows;
};

struct ClassificationReport {
  int n = 0;
  std::vector<Section> sections;
  std::size_t main_section = 0;  // the section whose count is 8 / 13 / 7
  std::vector<ExcludedRow> excluded;
  std::vector<OpenFamily> open_families;

  std::size_t theorem_row_count() const {
    return sections.empty() ? 0 : sections[main_section].rows.size();
  }
};

// Runs the solvers for dimension n, joins every row against the ledger
// (missing record, invariant drift, or a label out of order throw
// std::runtime_error), and partitions into surviving rows and exclusions.
ClassificationReport classify(int n, const KnowledgeBase& kb);

// The r = n + 2 corollary: surviving rows over P^{n+2} for n = 1, 2, 3 with
// the quadric-base family counted once, parametrically (18 types). With
// expand_parametric the parametric family is replaced by its in-range
// instances plus a note that it continues for every r >= 3.
struct CorollaryRow {
  std::string source;  // originating theorem label, e.g. "n2.VI"
  std::string case_id;
  std::string description;
  std::string citation;
};
std::vector<CorollaryRow> corollary_r_n_plus_2(const KnowledgeBase& kb,
                                               bool expand_parametric);

// Recompute the Hilbert profile of every stored resolution and compare with
// the record invariants (d, g, and chi(O_S) for records over P^4 /
// chi(O_X) over P^5; codimension must be 2).
struct ResolutionCheck {
  std::string case_id;
  sheaf::SheafResolution resolution;
  sheaf::HilbertProfile computed;
  Int expect_d;
  Int expect_g;
  Int expect_chi;
  bool pass = false;
  std::string detail;
};
std::vector<ResolutionCheck> verify_resolutions(const KnowledgeBase& kb);

}  // namespace birat::knowledge

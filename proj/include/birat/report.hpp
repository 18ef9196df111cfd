#pragma once

// Deterministic rendering of engine results as Markdown, JSON, or CSV.
//
// All three renderers are pure functions of their input (no timestamps, no
// addresses, no locale dependence), so repeated runs are byte-identical.
//   markdown: pipe tables with padded, aligned columns
//   json:     objects with stable key order (insertion order)
//   csv:      RFC 4180 (CRLF records, minimal quoting); multiple tables are
//             concatenated with a leading "section" column naming the table

#include "birat/knowledge.hpp"
#include "birat/multisecant.hpp"
#include "birat/numerology.hpp"
#include "birat/solver.hpp"

#include <string>
#include <vector>

namespace birat::report {

enum class Format { markdown, json, csv };

// Parses "md" / "markdown", "json", "csv"; throws std::runtime_error.
Format parse_format(const std::string& name);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Document {
  std::string heading;
  std::vector<std::string> preamble;  // paragraphs
  std::vector<Table> tables;
};

std::string render(const Document& doc, Format format);

// Builders for the CLI subcommands (shared with the acceptance tests).
Document numerology_document(const std::vector<int>& dims);
Document maximal_list_document(int n, bool show_rejected);
Document classify_document(const std::vector<int>& dims, bool corollary,
                           bool expand_parametric,
                           const knowledge::KnowledgeBase& kb);
Document lebarz_document(const std::string& formula, const exact::Int& d,
                         const exact::Int& g, const exact::Int& K2,
                         const exact::Int& chi,
                         const std::vector<int>& lines, bool scroll);
Document verify_resolutions_document(const knowledge::KnowledgeBase& kb);
Document liaison_document(const exact::Int& d, const exact::Int& g, int p,
                          int q, const std::string& resolution_text, int r);

}  // namespace birat::report

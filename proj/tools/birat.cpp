// birat — exact-arithmetic classification engine for special birational
// transformations of projective space with smooth base locus.
//
// Subcommands:
//   numerology          enumerate the admissible numerical types (n, r, a, b, i, m)
//   maximal-list        derive the maximal candidate list for one dimension
//   classify            join the candidate lists against the verdict ledger
//   lebarz              evaluate one multisecant-line count
//   verify-resolutions  recompute Hilbert profiles of the stored resolutions
//   liaison             residual invariants (and resolution transport) under
//                       complete-intersection linkage
//
// Exit codes: 0 success, 1 runtime failure (including a failed resolution
// check), 2 usage error.

#include "CLI11.hpp"

#include "birat/exact.hpp"
#include "birat/knowledge.hpp"
#include "birat/report.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using birat::exact::Int;
namespace report = birat::report;
namespace knowledge = birat::knowledge;

// Shared output options: every subcommand renders one report::Document.
struct OutputOptions {
  std::string format = "md";
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--format,-f", opt.format,
                  "output format: md (default), json, or csv")
      ->check(CLI::IsMember({"md", "markdown", "json", "csv"}));
  cmd->add_option("--out,-o", opt.out,
                  "write the report to this file instead of stdout");
}

void emit(const report::Document& doc, const OutputOptions& opt) {
  const std::string text = report::render(doc, report::parse_format(opt.format));
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
  file << text;
  if (!file) throw std::runtime_error("cannot write output file: " + opt.out);
}

// The ledger used by classify / verify-resolutions: the built-in one unless
// the user supplies a file.
const knowledge::KnowledgeBase& load_ledger(const std::string& path) {
  if (path.empty()) return knowledge::KnowledgeBase::builtin();
  static knowledge::KnowledgeBase loaded =
      knowledge::KnowledgeBase::load_file(path);
  return loaded;
}

Int to_int(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("invalid integer for ") + what +
                             ": '" + text + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic classification of special birational "
      "transformations of P^r with smooth n-dimensional base locus"};
  app.require_subcommand(1);

  // numerology -------------------------------------------------------------
  std::vector<int> num_dims{1, 2, 3};
  OutputOptions num_out;
  auto* num = app.add_subcommand(
      "numerology", "enumerate the numerical types (n, r, a, b, i, m)");
  num->add_option("--n,-n", num_dims,
                  "base-locus dimensions to enumerate (default: 1 2 3)")
      ->check(CLI::Range(1, 3));
  add_output_options(num, num_out);

  // maximal-list -------------------------------------------------------------
  int ml_n = 0;
  bool ml_rejected = false;
  OutputOptions ml_out;
  auto* ml = app.add_subcommand(
      "maximal-list",
      "derive the maximal candidate list for one base-locus dimension");
  ml->add_option("--n,-n", ml_n, "base-locus dimension (1, 2, or 3)")
      ->required()
      ->check(CLI::Range(1, 3));
  ml->add_flag("--show-rejected", ml_rejected,
               "include the rejected candidates with their reasons");
  add_output_options(ml, ml_out);

  // classify -----------------------------------------------------------------
  std::vector<int> cl_dims{1, 2, 3};
  std::string cl_ledger;
  bool cl_corollary = false;
  bool cl_expand = false;
  OutputOptions cl_out;
  auto* cl = app.add_subcommand(
      "classify", "produce the classification tables from the verdict ledger");
  cl->add_option("--n,-n", cl_dims,
                 "base-locus dimensions to classify (default: 1 2 3)")
      ->check(CLI::Range(1, 3));
  cl->add_option("--knowledge", cl_ledger,
                 "verdict ledger file (default: the built-in ledger)")
      ->check(CLI::ExistingFile);
  cl->add_flag("--corollary", cl_corollary,
               "append the corollary table of transformations of P^(n+2)");
  cl->add_flag("--expand-parametric", cl_expand,
               "expand the parametric quadric family in the corollary");
  add_output_options(cl, cl_out);

  // lebarz ---------------------------------------------------------------------
  std::string lb_formula;
  std::string lb_d, lb_g, lb_chi;
  std::string lb_K2;
  std::vector<int> lb_lines;
  bool lb_scroll = false;
  OutputOptions lb_out;
  auto* lb = app.add_subcommand(
      "lebarz", "evaluate one multisecant-line count for a smooth surface");
  lb->add_option("--formula", lb_formula,
                 "which count: N2, N36, N34, N44, N54, or N64")
      ->required();
  lb->add_option("--d", lb_d, "degree of the surface")->required();
  lb->add_option("--g", lb_g, "sectional genus")->required();
  lb->add_option("--chi", lb_chi, "chi(O_S)")->required();
  lb->add_option("--K2", lb_K2, "K_S^2 (required for N2 and N36)");
  lb->add_option("--lines", lb_lines,
                 "self-intersections of lines on the surface (N64 correction)");
  lb->add_flag("--scroll", lb_scroll,
               "the surface is a scroll (flags non-enumerative cases)");
  add_output_options(lb, lb_out);

  // verify-resolutions ------------------------------------------------------
  std::string vr_ledger;
  OutputOptions vr_out;
  auto* vr = app.add_subcommand(
      "verify-resolutions",
      "recompute (d, g, chi) from every stored ideal-sheaf resolution");
  vr->add_option("--knowledge", vr_ledger,
                 "verdict ledger file (default: the built-in ledger)")
      ->check(CLI::ExistingFile);
  add_output_options(vr, vr_out);

  // liaison -------------------------------------------------------------------
  std::string li_d, li_g;
  int li_p = 0, li_q = 0, li_r = 5;
  std::string li_res;
  OutputOptions li_out;
  auto* li = app.add_subcommand(
      "liaison",
      "invariants of the residual in a complete intersection (p, q)");
  li->add_option("--d", li_d, "degree of the linked variety")->required();
  li->add_option("--g", li_g, "sectional genus of the linked variety")
      ->required();
  li->add_option("--p", li_p, "first complete-intersection degree")
      ->required();
  li->add_option("--q", li_q, "second complete-intersection degree")
      ->required();
  li->add_option("--resolution", li_res,
                 "ideal-sheaf resolution of the input (e.g. \"O(-5)^4 -> "
                 "O(-4)^5\"); its liaison transport is reported");
  li->add_option("--r", li_r, "ambient projective space P^r (default 5)")
      ->check(CLI::Range(2, 32));
  add_output_options(li, li_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (num->parsed()) {
    emit(report::numerology_document(num_dims), num_out);
    return 0;
  }
  if (ml->parsed()) {
    emit(report::maximal_list_document(ml_n, ml_rejected), ml_out);
    return 0;
  }
  if (cl->parsed()) {
    emit(report::classify_document(cl_dims, cl_corollary, cl_expand,
                                   load_ledger(cl_ledger)),
         cl_out);
    return 0;
  }
  if (lb->parsed()) {
    std::string formula = lb_formula;
    for (auto& c : formula) c = static_cast<char>(std::tolower(c));
    const bool needs_K2 = formula == "n2" || formula == "n36" ||
                          formula == "n3,6" || formula == "n3_6";
    if (needs_K2 && lb_K2.empty()) {
      std::cerr << "error: formula " << lb_formula
                << " requires --K2\n";
      return 2;  // usage error, same class as a missing required option
    }
    emit(report::lebarz_document(
             lb_formula, to_int(lb_d, "--d"), to_int(lb_g, "--g"),
             lb_K2.empty() ? Int(0) : to_int(lb_K2, "--K2"),
             to_int(lb_chi, "--chi"), lb_lines, lb_scroll),
         lb_out);
    return 0;
  }
  if (vr->parsed()) {
    const auto& kb = load_ledger(vr_ledger);
    emit(report::verify_resolutions_document(kb), vr_out);
    for (const auto& check : knowledge::verify_resolutions(kb))
      if (!check.pass) return 1;
    return 0;
  }
  if (li->parsed()) {
    emit(report::liaison_document(to_int(li_d, "--d"), to_int(li_g, "--g"),
                                  li_p, li_q, li_res, li_r),
         li_out);
    return 0;
  }
  return 0;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

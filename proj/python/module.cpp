// Python bindings for the classification engine: numerology tables, the
// maximal-list solvers with their rejection traces, the ledger-backed
// classification and its r = n + 2 corollary, the multisecant counts, the
// stored-resolution verifier, and liaison inside a complete intersection.
//
// Exact integers cross the boundary as native Python ints (arbitrary
// precision in both directions), optional invariants appear as dict keys
// only when the branch determines them, and every structured result is a
// plain dict / list so the module has no import-time state.

#include "birat/exact.hpp"
#include "birat/knowledge.hpp"
#include "birat/multisecant.hpp"
#include "birat/numerology.hpp"
#include "birat/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

using birat::exact::Int;

namespace {

py::int_ to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int from_py(const py::object& v) {
  if (!PyLong_Check(v.ptr()))
    throw py::type_error("expected an int, got " +
                         std::string(py::str(py::type::of(v))));
  return Int(py::str(v).cast<std::string>());
}

// Exact rationals become ints when integral, fractions.Fraction otherwise.
py::object rat_to_py(const birat::exact::Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return to_py(num);
  return py::module_::import("fractions")
      .attr("Fraction")(to_py(num), to_py(den));
}

py::dict type_dict(const birat::numerology::TransformationType& t) {
  py::dict d;
  d["n"] = t.n;
  d["r"] = t.r;
  d["a"] = t.a;
  d["b"] = t.b;
  d["i"] = t.i;
  d["m"] = t.m;
  d["secant_degree"] = birat::numerology::secant_degree(t);
  return d;
}

py::dict candidate_dict(const birat::solver::Candidate& c) {
  py::dict d;
  d["case_id"] = c.case_id;
  d["branch"] = c.branch;
  d["type"] = type_dict(c.type);
  d["provenance"] = birat::solver::to_string(c.provenance);
  d["scroll"] = c.scroll;
  d["d"] = to_py(c.d);
  d["g"] = to_py(c.g);
  d["z"] = to_py(c.z);
  d["e"] = to_py(c.e);
  auto opt = [&](const char* key, const std::optional<Int>& v) {
    if (v) d[key] = to_py(*v);
  };
  opt("K2", c.K2);
  opt("chi", c.chi);
  opt("KS2", c.KS2);
  opt("chiS", c.chiS);
  opt("chiX", c.chiX);
  opt("KX3", c.KX3);
  if (!c.note.empty()) d["note"] = c.note;
  d["derivation"] = c.derivation;
  return d;
}

py::dict solve_dict(const birat::solver::SolveResult& res) {
  py::list rows;
  for (const auto& c : res.rows) rows.append(candidate_dict(c));
  py::list rejected;
  for (const auto& r : res.rejected) {
    py::dict e;
    e["branch"] = r.branch;
    e["candidate"] = r.candidate;
    e["reason"] = r.reason;
    e["provenance"] = birat::solver::to_string(r.provenance);
    e["type"] = type_dict(r.type);
    rejected.append(e);
  }
  py::dict d;
  d["rows"] = rows;
  d["rejected"] = rejected;
  return d;
}

py::dict secant_dict(const birat::multisecant::SecantCount& s) {
  py::dict d;
  d["value"] = rat_to_py(s.value);
  d["applicable"] = s.applicable;
  d["caveat"] = std::string(s.caveat);
  return d;
}

py::dict classify_dict(const birat::knowledge::ClassificationReport& rep) {
  py::list sections;
  for (const auto& sec : rep.sections) {
    py::list rows;
    for (const auto& row : sec.rows) {
      py::dict e;
      e["label"] = row.label;
      e["case_id"] = row.case_id;
      e["row"] = candidate_dict(row.row);
      e["description"] = row.description;
      e["citation"] = row.citation;
      e["has_resolution"] = row.has_resolution;
      rows.append(e);
    }
    py::dict s;
    s["title"] = sec.title;
    s["rows"] = rows;
    sections.append(s);
  }
  py::list excluded;
  for (const auto& ex : rep.excluded) {
    py::dict e;
    e["case_id"] = ex.case_id;
    e["verdict"] = birat::knowledge::to_string(ex.verdict);
    e["row"] = candidate_dict(ex.row);
    e["description"] = ex.description;
    e["citation"] = ex.citation;
    excluded.append(e);
  }
  py::list open_families;
  for (const auto& fam : rep.open_families) {
    py::dict e;
    e["family"] = fam.family;
    e["note"] = fam.note;
    e["citation"] = fam.citation;
    open_families.append(e);
  }
  py::dict d;
  d["n"] = rep.n;
  d["sections"] = sections;
  d["main_section"] = static_cast<int>(rep.main_section);
  d["theorem_row_count"] = static_cast<int>(rep.theorem_row_count());
  d["excluded"] = excluded;
  d["open_families"] = open_families;
  return d;
}

birat::knowledge::KnowledgeBase ledger(const std::string& path) {
  return path.empty() ? birat::knowledge::KnowledgeBase::builtin()
                      : birat::knowledge::KnowledgeBase::load_file(path);
}

}  // namespace

PYBIND11_MODULE(pybirat, m) {
  m.doc() =
      "Exact classification engine for special birational transformations "
      "with smooth base locus of dimension 1, 2, or 3: numerology, "
      "maximal candidate lists, ledger-backed classification, multisecant "
      "counts, resolution verification, and liaison.";

  m.def(
      "types",
      [](int n) {
        py::list out;
        for (const auto& t : birat::numerology::enumerate_types(n))
          out.append(type_dict(t));
        return out;
      },
      py::arg("n"),
      "All numerical types (r, a, b, i, m) admissible for a base locus of "
      "dimension n, in table order.");

  m.def(
      "solve_n1", [] { return solve_dict(birat::solver::solve_n1()); },
      "Maximal list for curves (10 rows) with the rejection trace.");
  m.def(
      "solve_n2", [] { return solve_dict(birat::solver::solve_n2()); },
      "Maximal list for surfaces (20 rows) with the rejection trace.");
  m.def(
      "solve_n3_a4",
      [] { return solve_dict(birat::solver::solve_n3_a4()); },
      "Maximal list for threefolds of type (4, b) (3 rows).");
  m.def(
      "solve_n3_a5",
      [](int b_min) {
        return solve_dict(birat::solver::solve_n3_a5(b_min));
      },
      py::arg("b_min") = 2,
      "Maximal list for threefolds of type (5, b >= b_min); b_min = 1 "
      "adds the eleven (5, 1) rows.");
  m.def(
      "solve_n3_easy",
      [] { return solve_dict(birat::solver::solve_n3_easy()); },
      "Threefold families settled by classical classification results "
      "(6 rows).");

  m.def(
      "classify",
      [](int n, const std::string& ledger_path) {
        return classify_dict(
            birat::knowledge::classify(n, ledger(ledger_path)));
      },
      py::arg("n"), py::arg("ledger_path") = std::string(),
      "Join the dimension-n maximal list against the verdict ledger: "
      "surviving theorem rows, exclusions, and open families.");

  m.def(
      "corollary",
      [](bool expand_parametric, const std::string& ledger_path) {
        py::list out;
        for (const auto& row : birat::knowledge::corollary_r_n_plus_2(
                 ledger(ledger_path), expand_parametric)) {
          py::dict e;
          e["source"] = row.source;
          e["case_id"] = row.case_id;
          e["description"] = row.description;
          e["citation"] = row.citation;
          out.append(e);
        }
        return out;
      },
      py::arg("expand_parametric") = false,
      py::arg("ledger_path") = std::string(),
      "The r = n + 2 corollary: 18 types with the quadric-base family "
      "counted parametrically (21 entries expanded).");

  m.def(
      "verify_resolutions",
      [](const std::string& ledger_path) {
        py::list out;
        for (const auto& chk : birat::knowledge::verify_resolutions(
                 ledger(ledger_path))) {
          py::dict e;
          e["case_id"] = chk.case_id;
          e["pass"] = chk.pass;
          e["d"] = to_py(chk.computed.d);
          e["g"] = to_py(chk.computed.g);
          e["chi"] = to_py(chk.computed.chi);
          py::dict want;
          want["d"] = to_py(chk.expect_d);
          want["g"] = to_py(chk.expect_g);
          want["chi"] = to_py(chk.expect_chi);
          e["expected"] = want;
          e["detail"] = chk.detail;
          out.append(e);
        }
        return out;
      },
      py::arg("ledger_path") = std::string(),
      "Recompute the Hilbert profile (d, g, chi) of every stored "
      "ideal-sheaf resolution and compare with the ledger invariants.");

  m.def(
      "n2",
      [](const py::object& d, const py::object& g, const py::object& K2,
         const py::object& chi) {
        return secant_dict(birat::multisecant::n2(
            from_py(d), from_py(g), from_py(K2), from_py(chi)));
      },
      py::arg("d"), py::arg("g"), py::arg("K2"), py::arg("chi"),
      "Secant lines through a general point for a surface in P^6.");
  m.def(
      "n3_6",
      [](const py::object& d, const py::object& g, const py::object& K2,
         const py::object& chi, bool scroll) {
        return secant_dict(birat::multisecant::n3_6(
            from_py(d), from_py(g), from_py(K2), from_py(chi), scroll));
      },
      py::arg("d"), py::arg("g"), py::arg("K2"), py::arg("chi"),
      py::arg("scroll") = false,
      "Trisecant lines through a general point for a surface in P^6.");
  m.def(
      "n3_4",
      [](const py::object& d, const py::object& g, const py::object& chi) {
        return secant_dict(
            birat::multisecant::n3_4(from_py(d), from_py(g), from_py(chi)));
      },
      py::arg("d"), py::arg("g"), py::arg("chi"),
      "Trisecant lines meeting a general line for a surface in P^4.");
  m.def(
      "n4_4",
      [](const py::object& d, const py::object& g, const py::object& chi) {
        return secant_dict(
            birat::multisecant::n4_4(from_py(d), from_py(g), from_py(chi)));
      },
      py::arg("d"), py::arg("g"), py::arg("chi"),
      "Quadrisecant lines meeting a general plane for a surface in P^4.");
  m.def(
      "n5_4",
      [](const py::object& d, const py::object& g, const py::object& chi,
         bool scroll) {
        return secant_dict(birat::multisecant::n5_4(
            from_py(d), from_py(g), from_py(chi), scroll));
      },
      py::arg("d"), py::arg("g"), py::arg("chi"), py::arg("scroll") = false,
      "Quinquesecant lines for a surface in P^4.");
  m.def(
      "n6_4",
      [](const py::object& d, const py::object& g, const py::object& chi,
         const std::vector<int>& lines, bool scroll) {
        return secant_dict(birat::multisecant::n6_4(
            from_py(d), from_py(g), from_py(chi), lines, scroll));
      },
      py::arg("d"), py::arg("g"), py::arg("chi"),
      py::arg("lines") = std::vector<int>{}, py::arg("scroll") = false,
      "Six-secant lines for a surface in P^4, with the correction for "
      "lines of given self-intersection contained in the surface.");

  m.def(
      "liaison",
      [](const py::object& d, const py::object& g, int p, int q) {
        const auto linked =
            birat::solver::liaison_invariants(from_py(d), from_py(g), p, q);
        return py::make_tuple(to_py(linked.first), to_py(linked.second));
      },
      py::arg("d"), py::arg("g"), py::arg("p"), py::arg("q"),
      "Degree and sectional genus of the residual inside a complete "
      "intersection (p, q).");
}

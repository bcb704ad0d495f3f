#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matroidwb/analysis.hpp"
#include "matroidwb/classifiers.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/fixtures.hpp"
#include "matroidwb/formats.hpp"

namespace py = pybind11;
using namespace matroidwb;

namespace {

using Sets = std::vector<std::vector<int>>;

Sets to_lists(const std::vector<Subset>& v) {
  Sets out;
  for (Subset s : v) out.push_back(elements_of(s));
  return out;
}

std::vector<Subset> from_lists(const Sets& v) {
  std::vector<Subset> out;
  for (const auto& s : v) out.push_back(subset_of(s));
  return out;
}

// Verdicts cross into Python as plain dicts; rationals as "p/q" strings.
py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["property"] = v.property;
  d["outcome"] = outcome_name(v.outcome);
  d["certificate"] = certificate_name(v.certificate);
  if (v.pair) d["pair"] = py::make_tuple(v.pair->first, v.pair->second);
  if (v.witness) {
    std::vector<std::string> point;
    for (const auto& q : v.witness->point) point.push_back(format_rational(q));
    d["point"] = point;
    d["value"] = format_rational(v.witness->value);
  }
  d["diagnostics"] = v.diagnostics;
  return d;
}

AnalysisOptions analysis_options(long budget, std::uint64_t seed, bool sos) {
  AnalysisOptions o;
  o.budget = budget;
  o.seed = seed;
  o.run_sos = sos;
  return o;
}

}  // namespace

PYBIND11_MODULE(_matroidwb, m) {
  m.doc() = "Matroid workbench core";

  py::register_exception<MatroidError>(m, "MatroidError", PyExc_ValueError);

  py::class_<Matroid>(m, "Matroid")
      .def(py::init([](int n, const Sets& bases) { return Matroid::from_bases(n, from_lists(bases)); }), py::arg("n"),
           py::arg("bases"))
      .def_property_readonly("size", &Matroid::size)
      .def_property_readonly("rank", &Matroid::rank)
      .def_property_readonly("bases", [](const Matroid& x) { return to_lists(x.bases()); })
      .def("dual", [](const Matroid& x) { return dual(x); })
      .def("is_connected", [](const Matroid& x) { return is_connected(x); })
      .def("to_text", [](const Matroid& x) { return write_matroid(x); })
      .def_static("from_text", [](const std::string& t) { return read_matroid(t); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__len__", [](const Matroid& x) { return x.num_bases(); })
      .def("__repr__", [](const Matroid& x) {
        return "<Matroid n=" + std::to_string(x.size()) + " r=" + std::to_string(x.rank()) +
               " bases=" + std::to_string(x.num_bases()) + ">";
      });

  m.def("uniform", &uniform, py::arg("k"), py::arg("n"));
  m.def("lattice_path", [](const std::vector<int>& lower, const std::vector<int>& upper, int n) {
    return lattice_path(LatticePathPair::from_bounds(lower, upper, n ? n : upper.back()));
  }, py::arg("lower"), py::arg("upper"), py::arg("n") = 0);
  m.def("graphic", [](int v, const std::vector<std::pair<int, int>>& edges) { return graphic(MultiGraph{v, edges}); },
        py::arg("vertices"), py::arg("edges"));
  m.def("whirl", &whirl, py::arg("r"));
  m.def("atlas", [](const std::string& name) { return named_atlas(name); }, py::arg("name"));
  m.def("principal_truncation", [](const Matroid& x, const std::vector<int>& f) { return principal_truncation(x, subset_of(f)); });
  m.def("principal_extension", [](const Matroid& x, const std::vector<int>& f) { return principal_extension(x, subset_of(f)); });

  m.def("basis_poly", [](const Matroid& x) { return dump(basis_poly(x)); }, "basis polynomial as text");
  m.def("rayleigh_diff", [](const Matroid& x, int i, int j) { return dump(rayleigh_diff(basis_poly(x), i, j)); });

  m.def("neg_corr", [](const Matroid& x) { return verdict_dict(neg_corr_all_pairs(x)); });
  m.def("is_balanced", [](const Matroid& x) { return verdict_dict(is_balanced(x)); });
  m.def("rayleigh", [](const Matroid& x, long budget, std::uint64_t seed, bool sos) {
    return verdict_dict(rayleigh_verdict(basis_poly(x), std::nullopt, analysis_options(budget, seed, sos)));
  }, py::arg("m"), py::arg("budget") = 20000, py::arg("seed") = 1, py::arg("sos") = true);
  m.def("strong_rayleigh", [](const Matroid& x, long budget, std::uint64_t seed, bool sos) {
    return verdict_dict(strong_rayleigh_verdict(basis_poly(x), std::nullopt, analysis_options(budget, seed, sos)));
  }, py::arg("m"), py::arg("budget") = 20000, py::arg("seed") = 1, py::arg("sos") = true);
  m.def("hpp", [](const Matroid& x, long budget, std::uint64_t seed, bool cross_check) {
    HppOptions o;
    o.budget = budget;
    o.seed = seed;
    o.cross_check_all_pairs = cross_check;
    return verdict_dict(hpp_verdict(x, o));
  }, py::arg("m"), py::arg("budget") = 20000, py::arg("seed") = 1, py::arg("cross_check") = false);

  m.def("is_paving", &is_paving);
  m.def("is_sparse_paving", &is_sparse_paving);
  m.def("positroid_order", [](const Matroid& x) -> std::optional<LinearOrder> { return positroid_verdict(x).order; });
  m.def("sparse_paving_family", [](int n, int r, std::size_t limit) { return sparse_paving_family(n, r, limit); },
        py::arg("n"), py::arg("r"), py::arg("limit") = 5000);

  m.def("reference_fixtures", []() {
    std::vector<py::dict> out;
    for (const auto& f : run_reference_fixtures()) {
      py::dict d;
      d["name"] = f.name;
      d["passed"] = f.passed;
      d["informational"] = f.informational;
      d["detail"] = f.detail;
      out.push_back(d);
    }
    return out;
  });
}

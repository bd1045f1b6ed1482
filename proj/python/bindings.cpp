#include "cremona/cli.hpp"
#include "cremona/document.hpp"
#include "cremona/error.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cremona;

namespace {

// Python ints cross the boundary through their decimal text, so size is unbounded.
Integer from_py(const py::int_& x) { return parse_integer(py::str(x).cast<std::string>()); }

py::int_ to_py(const Integer& x) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10))); }

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

std::vector<Integer> from_py(const std::vector<py::int_>& xs) {
  std::vector<Integer> out;
  for (const auto& x : xs) out.push_back(from_py(x));
  return out;
}

std::string curve_text(const CurveDatum& c) {
  return dump(to_json(CurveDocument{kSchemaVersion, c, std::nullopt, std::nullopt}));
}

std::optional<Family> family_arg(const std::optional<std::string>& f) {
  if (!f) return std::nullopt;
  return family_from_string(*f);
}

}  // namespace

PYBIND11_MODULE(_cremona, m) {
  m.doc() = "Cremona constructions on combinatorial plane-curve data";

  static py::exception<Error> error(m, "CremonaError", PyExc_ValueError);
  static py::exception<HypothesisError> hypothesis_error(m, "HypothesisError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const HypothesisError& e) {
      PyErr_SetObject(hypothesis_error.ptr(), py::make_tuple(e.what(), e.hypothesis()).ptr());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("free_reduce", [](const std::string& w) { return free_reduce(Word::parse(w)).str(); }, py::arg("word"));
  m.def("smith_normal_form",
        [](const std::vector<std::vector<py::int_>>& rows) {
          std::vector<std::vector<Integer>> m;
          for (const auto& r : rows) m.push_back(from_py(r));
          return to_py(smith_normal_form(IntMatrix::from_rows(m)));
        },
        py::arg("rows"));
  m.def("abelianization",
        [](const std::string& presentation) {
          const auto inv = abelianization(Presentation::parse(presentation));
          return py::make_tuple(inv.free_rank, to_py(inv.torsion));
        },
        py::arg("presentation"), "Returns (free_rank, torsion) of a presentation `<a, b | r1, r2>`.");
  m.def("cyclic_quotient_order", [](const std::vector<py::int_>& ns) { return to_py(cyclic_quotient_order(from_py(ns))); },
        py::arg("ns"));

  m.def("canonical_group", [](const std::string& g) { return GroupDescriptor::parse(g).str(); }, py::arg("group"));
  m.def("central_extend",
        [](const std::string& g, const py::int_& n, bool irreducible, const std::optional<std::string>& family) {
          const auto r = central_extend_traced(GroupDescriptor::parse(g), from_py(n), {irreducible, family_arg(family)});
          return py::make_tuple(r.group.str(), to_string(r.rule));
        },
        py::arg("group"), py::arg("kernel_order"), py::arg("irreducible") = false, py::arg("family") = py::none(),
        "Returns (descriptor, rule).");
  m.def("split_test",
        [](std::size_t free_rank, const std::vector<py::int_>& torsion, const py::int_& components,
           const py::int_& n) {
          AbelianInvariants h1{free_rank, from_py(torsion)};
          h1.validate();
          const auto v = split_test(h1, from_py(components), from_py(n));
          return py::make_tuple(to_string(v.kind), to_string(v.justification));
        },
        py::arg("free_rank"), py::arg("torsion"), py::arg("components"), py::arg("kernel_order"));

  m.def("singularity_drop", [](const std::string& t) { return to_py(drop(SingularityType::parse(t))); }, py::arg("type"));
  m.def("degree_after", [](const py::int_& d, const std::string& spec) {
    return to_py(degree_after(from_py(d), ConstructionSpec::parse(spec)));
  }, py::arg("degree"), py::arg("spec"));
  m.def("added_singularities",
        [](const py::int_& d, const std::string& spec) {
          std::vector<std::string> out;
          for (const auto& t : added_singularities(from_py(d), ConstructionSpec::parse(spec)).items())
            out.push_back(t.str());
          return out;
        },
        py::arg("degree"), py::arg("spec"));
  m.def("audit", [](const py::int_& d, const std::string& spec) {
    return dump(to_json(audit_self_intersection(from_py(d), ConstructionSpec::parse(spec))));
  }, py::arg("degree"), py::arg("spec"), "Audit report as JSON text.");
  m.def("meridians",
        [](const std::string& spec) {
          std::map<std::string, std::string> out;
          for (const auto& [label, w] : run_schedule(ConstructionSpec::parse(spec))) out[label] = w.str();
          return out;
        },
        py::arg("spec"));
  m.def("meridian_trace", [](const std::string& spec) {
    return schedule_trace(run_schedule_state(ConstructionSpec::parse(spec)));
  }, py::arg("spec"));

  m.def("seed_smooth", [](const py::int_& d) { return curve_text(seed_smooth(from_py(d))); }, py::arg("degree"));
  m.def("seed_pencil", [](const py::int_& n) { return curve_text(seed_pencil(from_py(n))); }, py::arg("lines"));
  m.def("seed_generic_lines", [](const py::int_& n) { return curve_text(seed_generic_lines(from_py(n))); },
        py::arg("lines"));
  m.def("apply",
        [](const std::string& document, const std::string& spec) {
          const auto s = ConstructionSpec::parse(spec);
          const auto doc = parse_document(document);
          return dump(to_json(CurveDocument{kSchemaVersion, apply(doc.curve, s),
                                            audit_self_intersection(doc.curve.degree(), s), std::nullopt}));
        },
        py::arg("document"), py::arg("spec"), "Applies a construction to a curve document (JSON text).");
  m.def("zariski_enumerate",
        [](const std::string& left, const std::string& right, long long bound) {
          const auto pair = make_seed_pair(parse_document(left).curve, parse_document(right).curve);
          return dump(pairs_document(enumerate_family(pair, bound)));
        },
        py::arg("left"), py::arg("right"), py::arg("bound"));
  m.def("run_cli",
        [](const std::vector<std::string>& args, const std::string& input) {
          std::istringstream in(input);
          std::ostringstream out, err;
          const int status = run_cli(args, in, out, err);
          return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command-line tool in-process: (status, stdout, stderr).");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsslab/analysis.hpp"
#include "gsslab/cli.hpp"
#include "gsslab/error.hpp"
#include "gsslab/gf2x.hpp"
#include "gsslab/gss.hpp"
#include "gsslab/sequences.hpp"
#include "gsslab/theorems.hpp"

namespace py = pybind11;
using namespace gsslab;

namespace {

PrimitivePolynomial poly_of(const std::string& text, int max_degree) { return validate_primitive(text, max_degree); }

py::object index_to_py(const GssIndex& index) {
  if (index.is_zero()) return py::str("zero");
  return py::int_(index.s());
}

GssIndex index_from_py(const Field& field, const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return parse_index(field, std::to_string(obj.cast<long long>()));
  return parse_index(field, obj.cast<std::string>());
}

py::dict report_dict(const SequenceReport& r) {
  py::dict d;
  d["length"] = r.length;
  d["period"] = r.least_period;
  d["lc"] = r.linear_complexity;
  d["ones"] = r.counts.ones;
  d["zeros"] = r.counts.zeros;
  if (r.runs) {
    py::dict runs;
    for (const auto& [len, c] : *r.runs) runs[py::int_(len)] = py::make_tuple(c.blocks, c.gaps);
    d["runs"] = runs;
  } else {
    d["runs"] = py::none();
  }
  if (r.parity) {
    d["even"] = py::make_tuple(r.parity->even.ones, r.parity->even.zeros);
    d["odd"] = py::make_tuple(r.parity->odd.ones, r.parity->odd.zeros);
  } else {
    d["even"] = py::none();
    d["odd"] = py::none();
  }
  return d;
}

py::dict verdict_dict(const VerdictReport& v) {
  py::dict d;
  d["name"] = v.name;
  d["status"] = std::string(to_string(v.status));
  d["scope"] = v.scope;
  d["vacuous"] = v.vacuous;
  d["notes"] = v.notes;
  if (v.witness) {
    py::dict w;
    w["index"] = v.witness->index ? index_to_py(*v.witness->index) : py::none();
    w["position"] = v.witness->position ? py::object(py::int_(*v.witness->position)) : py::none();
    w["details"] = v.witness->details;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized self-shrinking sequence workbench";

  static py::exception<Error> gsslab_error(m, "GsslabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(gsslab_error.ptr(), e.what());
    }
  });

  m.def(
      "validate_primitive",
      [](const std::string& text, int max_degree) {
        const auto p = poly_of(text, max_degree);
        return py::make_tuple(p.to_string(), p.to_hex(), p.degree());
      },
      py::arg("poly"), py::arg("max_degree") = kDefaultMaxDegree,
      "Returns (symbolic, hex, degree); raises GsslabError if not primitive.");

  m.def(
      "primitive_polynomials",
      [](int degree) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_primitive(degree)) out.push_back(p.to_hex());
        return out;
      },
      py::arg("degree"));

  m.def(
      "msequence", [](const std::string& poly) { return generate_msequence(poly_of(poly, kDefaultMaxDegree)).bits.to_string(); },
      py::arg("poly"));

  m.def(
      "generate",
      [](const std::string& poly, const py::object& index) {
        const auto p = poly_of(poly, kDefaultMaxDegree);
        const Field f(p);
        return gss_generate(generate_msequence(p), index_from_py(f, index)).bits.to_string();
      },
      py::arg("poly"), py::arg("index"), "One family member; index is an int shift, 'zero', 'ss' or 'G=<bits>'.");

  m.def(
      "family",
      [](const std::string& poly) {
        std::vector<std::pair<py::object, std::string>> out;
        for (const auto& mem : gss_family(generate_msequence(poly_of(poly, cli::kExhaustiveCap))).members) {
          out.emplace_back(index_to_py(mem.index), mem.bits.to_string());
        }
        return out;
      },
      py::arg("poly"));

  m.def(
      "analyze", [](const std::string& bits) { return report_dict(analyze(BitVector::from_string(bits))); },
      py::arg("bits"));

  m.def(
      "linear_complexity", [](const std::string& bits) { return linear_complexity(BitVector::from_string(bits)); },
      py::arg("bits"));

  m.def(
      "complement_partner",
      [](const std::string& poly, std::uint32_t s) {
        const Field f(poly_of(poly, kDefaultMaxDegree));
        return complement_partner(f, GssIndex::shift(s)).s();
      },
      py::arg("poly"), py::arg("s"));

  m.def(
      "special_exponents",
      [](const std::string& poly) {
        const auto e = find_special_exponents(Field(poly_of(poly, kDefaultMaxDegree)));
        py::dict d;
        d["m"] = e.m;
        d["p"] = e.p;
        d["q"] = e.q;
        return d;
      },
      py::arg("poly"));

  m.def("verifier_names", &verifier_names);

  m.def(
      "verify",
      [](const std::string& poly, std::vector<std::string> names) {
        const Workbench bench(poly_of(poly, kDefaultMaxDegree));
        if (names.empty()) names = verifier_names();
        std::vector<py::dict> out;
        std::vector<VerdictReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_selected(bench, names);
        }
        for (const auto& r : reports) out.push_back(verdict_dict(r));
        return out;
      },
      py::arg("poly"), py::arg("names") = std::vector<std::string>{});
}

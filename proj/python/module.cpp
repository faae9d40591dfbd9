#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "heegaard/cli.hpp"
#include "heegaard/complex.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/error.hpp"
#include "heegaard/format.hpp"
#include "heegaard/oracle.hpp"

namespace py = pybind11;
using namespace heegaard;

namespace {

std::vector<std::vector<long long>> rows_of(const IntersectionMatrix& m) {
  std::vector<std::vector<long long>> rows(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) rows[static_cast<std::size_t>(i)].push_back(m.at(i, j));
  }
  return rows;
}

CurvePairComplex working_complex(const DiagramFile& f) {
  if (!f.normal) throw InvalidInput("level-2 data required (file has words only)");
  CurvePairComplex c = build_complex(*f.normal);
  return c.cellular ? reduce_bigons(c) : c;
}

IntersectionMatrix matrix_of(const DiagramFile& f) {
  return f.normal ? intersection_matrix(working_complex(f)) : intersection_matrix(f.sequence);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heegaard diagram checks";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  py::class_<DiagramFile>(m, "Diagram")
      .def_property_readonly("genus", [](const DiagramFile& f) { return f.pd().genus(); })
      .def_property_readonly("level", &DiagramFile::level)
      .def_readonly("name", &DiagramFile::name)
      .def_readonly("manifold", &DiagramFile::manifold)
      .def_property_readonly("curve_names", [](const DiagramFile& f) { return f.sequence.names; })
      .def("serialize", &serialize)
      .def("to_json", &to_json, py::arg("indent") = 2);

  m.def("parse", &parse_diagram_file, py::arg("text"));
  m.def("load", [](const std::string& file) { return parse_diagram_file(load_diagram_text(file)); },
        py::arg("file"), "Path or builtin fixture name.");
  m.def("fixtures", &builtin_fixture_names);
  m.def("matrix", [](const DiagramFile& f) { return rows_of(matrix_of(f)); });
  m.def("parity", [](const DiagramFile& f) { return parity_check(matrix_of(f)); });
  m.def("certify", [](const DiagramFile& f, bool irreducible) {
    return certificate_text(certify(matrix_of(f), irreducible));
  }, py::arg("diagram"), py::arg("irreducible") = false);
  m.def("rectangle_condition", [](const DiagramFile& f) {
    const CurvePairComplex c = working_complex(f);
    if (!c.cellular) return false;
    return rectangle_condition(c, derive_dual_pants(c)).holds;
  });
  m.def("random_diagram", [](int genus, int twists, std::uint64_t seed, bool even) {
    GeneratorOptions opts;
    opts.even_parity = even;
    return make_file(random_diagram(genus, twists, seed, opts));
  }, py::arg("genus"), py::arg("twists"), py::arg("seed"), py::arg("even") = false);
  m.def("run", [](const std::vector<std::string>& args) {
    std::vector<std::string> argv{"heegaard"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs a CLI command; returns (exit code, stdout, stderr).");
}

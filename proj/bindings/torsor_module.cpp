#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "torsor/parse.hpp"
#include "torsor/suite.hpp"

namespace py = pybind11;
using namespace torsor;

namespace {

CartanDatum datum_from(const std::vector<std::vector<int>>& matrix,
                       std::vector<int> symmetrizers) {
  CartanDatum c;
  c.a = matrix;
  c.d = symmetrizers.empty() ? std::vector<int>(matrix.size(), 1) : std::move(symmetrizers);
  c.validate();
  return c;
}

// A small façade over an algebra handle for interactive use.
struct PyAlgebra {
  AlgebraHandle handle;

  std::string name() const { return handle.pres->display_name(); }
  std::vector<std::string> generators() const {
    std::vector<std::string> out;
    for (const Generator& g : handle.pres->generators()) out.push_back(g.name);
    return out;
  }
  std::vector<std::string> rules() const {
    std::vector<std::string> out;
    for (const Rule& r : handle.system->rules())
      out.push_back(handle.pres->word_str(r.lhs) + " -> " + r.rhs.str());
    return out;
  }
  std::string status() const {
    return handle.system->status() == SystemStatus::confluent_up_to_bound
               ? "confluent_up_to_bound"
               : "saturated_at_bound";
  }
  std::string normal_form(const std::string& expr) const {
    return handle.system->normal_form(parse_element(expr, handle.pres)).str();
  }
  bool is_zero(const std::string& expr) const {
    return handle.system->is_zero(parse_element(expr, handle.pres)).zero;
  }
  long dimension(int degree) const { return handle.system->graded_dimension(degree); }
  long dimension_oracle(int degree) const { return bruteforce_dimension(*handle.pres, degree); }
};

std::string run_spec_text(const std::string& json_text, int degree_bound, int samples) {
  SuiteSpec spec = parse_spec_text(json_text);
  RunOptions opts;
  if (degree_bound > 0) opts.degree_bound = degree_bound;
  opts.random_samples = samples;
  RunOutcome outcome = torsor::run(spec, opts);
  return report_to_json(outcome);
}

int run_spec_exit_code(const std::string& json_text) {
  SuiteSpec spec = parse_spec_text(json_text);
  return torsor::run(spec, RunOptions{}).exit_code;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact symbolic checker for quantum torsors and Hopf-Galois systems";

  py::register_exception<PoleError>(m, "PoleError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<InconclusiveError>(m, "InconclusiveError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text) { return Scalar::parse(text); }))
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("__pow__", [](const Scalar& a, int n) { return a.pow(n); })
      .def("inverse", &Scalar::inverse)
      .def("is_zero", &Scalar::is_zero)
      .def("specialize_q1", [](const Scalar& s) {
        std::ostringstream out;
        out << s.specialize_q1();
        return out.str();
      });

  m.def("q", []() { return Scalar::q_power(1); }, "the formal parameter q");
  m.def("q_power", &Scalar::q_power, py::arg("n"));
  m.def("q_integer", &q_integer, py::arg("n"), py::arg("d") = 1);
  m.def("q_factorial", &q_factorial, py::arg("n"), py::arg("d") = 1);

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("name", &PyAlgebra::name)
      .def_property_readonly("generators", &PyAlgebra::generators)
      .def_property_readonly("status", &PyAlgebra::status)
      .def("rules", &PyAlgebra::rules)
      .def("normal_form", &PyAlgebra::normal_form, py::arg("expr"))
      .def("is_zero", &PyAlgebra::is_zero, py::arg("expr"))
      .def("dimension", &PyAlgebra::dimension, py::arg("degree"))
      .def("dimension_oracle", &PyAlgebra::dimension_oracle, py::arg("degree"))
      .def("__repr__", [](const PyAlgebra& a) { return "Algebra(" + a.name() + ")"; });

  auto build_opts = [](int bound) {
    BuildOptions o;
    o.degree_bound = bound;
    return o;
  };

  m.def(
      "kashiwara_algebra",
      [build_opts](const std::vector<std::vector<int>>& matrix, std::vector<int> d,
                   int degree_bound) {
        return PyAlgebra{build_kashiwara(datum_from(matrix, std::move(d)),
                                         build_opts(degree_bound))};
      },
      py::arg("matrix"), py::arg("symmetrizers") = std::vector<int>{},
      py::arg("degree_bound") = 8);
  m.def(
      "quantum_group",
      [build_opts](const std::vector<std::vector<int>>& matrix, std::vector<int> d,
                   int degree_bound) {
        return PyAlgebra{
            build_uq(datum_from(matrix, std::move(d)), build_opts(degree_bound)).algebra};
      },
      py::arg("matrix"), py::arg("symmetrizers") = std::vector<int>{},
      py::arg("degree_bound") = 8);

  m.def("run_spec", &run_spec_text, py::arg("spec_json"), py::arg("degree_bound") = -1,
        py::arg("random_samples") = 50,
        "run a suite given as JSON text; returns the JSON report");
  m.def("run_spec_exit_code", &run_spec_exit_code, py::arg("spec_json"),
        "run a suite and return only the exit code (0 pass, 1 fail, 2 inconclusive)");

  m.attr("__version__") = "0.1.0";
}

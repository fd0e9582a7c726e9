#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gamma_ideal/cli.hpp"
#include "gamma_ideal/errors.hpp"
#include "gamma_ideal/ideal.hpp"
#include "gamma_ideal/json_io.hpp"
#include "gamma_ideal/numeric.hpp"
#include "gamma_ideal/parser.hpp"

namespace py = pybind11;
using namespace gamma_ideal;

namespace {

ShiftSystem system_from(const std::string& shifts) { return ShiftSystem(parse_shift_list(shifts)); }

GammaPoly poly_from(const std::string& text, const ShiftSystem& sys) {
  return parse_gamma_poly(text, sys.arity());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ideal membership for polynomials in s and Gamma(s + a_k)";

  // Later registrations are tried first, so derived types come after their bases.
  auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", usage.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<SamplingError>(m, "SamplingError", PyExc_RuntimeError);

  py::class_<ShiftSystem>(m, "ShiftSystem")
      .def(py::init(&system_from), py::arg("shifts"))
      .def_property_readonly("arity", &ShiftSystem::arity)
      .def_property_readonly("classes", &ShiftSystem::classes)
      .def("offset", &ShiftSystem::offset, py::arg("index"))
      .def("representative_of", &ShiftSystem::representative_of, py::arg("index"))
      .def_property_readonly("in_h", &ShiftSystem::in_h)
      .def("shifts", [](const ShiftSystem& s) {
        std::vector<std::string> out;
        for (const auto& a : s.shifts()) out.push_back(a.to_string());
        return out;
      })
      .def("to_json", [](const ShiftSystem& s) { return to_json(s).dump(); });

  m.def(
      "canonical",
      [](const std::string& text, std::size_t arity) { return to_string(parse_gamma_poly(text, arity)); },
      py::arg("poly"), py::arg("arity"));

  m.def(
      "normal_form",
      [](const ShiftSystem& sys, const std::string& text) { return to_string(normal_form(poly_from(text, sys), sys)); },
      py::arg("system"), py::arg("poly"));

  m.def(
      "decide",
      [](const ShiftSystem& sys, const std::string& text) {
        return to_json(decide_membership(poly_from(text, sys), sys)).dump();
      },
      py::arg("system"), py::arg("poly"));

  m.def(
      "certify",
      [](const ShiftSystem& sys, const std::string& text) {
        return to_json(certify(poly_from(text, sys), sys)).dump();
      },
      py::arg("system"), py::arg("poly"));

  m.def(
      "verify",
      [](const ShiftSystem& sys, const std::string& text, std::size_t samples, std::uint64_t seed, double tol) {
        const Verdict v = decide_membership(poly_from(text, sys), sys);
        return to_json(verify_verdict(v, sys, {samples, seed, tol})).dump();
      },
      py::arg("system"), py::arg("poly"), py::arg("samples") = 20, py::arg("seed") = 0, py::arg("tol") = 1e-8);

  m.def(
      "evaluate",
      [](const ShiftSystem& sys, const std::string& text, Complex s) {
        const PolyValue v = evaluate_poly(poly_from(text, sys), sys, s);
        return py::make_tuple(v.value, v.scale);
      },
      py::arg("system"), py::arg("poly"), py::arg("s"));

  m.def("gamma", [](Complex s) { return gamma_eval(s); }, py::arg("s"));

  m.def(
      "selftest", [](std::uint64_t seed) { return to_json(cli::run_selftest(GammaEvaluator(), seed)).dump(); },
      py::arg("seed") = 0);
}

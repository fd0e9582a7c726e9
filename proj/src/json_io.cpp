#include "gamma_ideal/json_io.hpp"

namespace gamma_ideal {

using nlohmann::json;

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ShiftSystem& sys) {
  json shifts = json::array();
  for (const auto& a : sys.shifts()) shifts.push_back(a.to_string());
  json classes = json::array();
  for (const auto& members : sys.classes()) {
    json offsets = json::array();
    for (std::size_t k : members) offsets.push_back(sys.offset(k));
    classes.push_back({{"members", members}, {"representative", members.front()}, {"offsets", offsets}});
  }
  return {{"shifts", shifts}, {"classes", classes}, {"in_h", sys.in_h()}};
}

json to_json(const Relation& relation) {
  return {{"target", relation.target},
          {"source", relation.source},
          {"multiplier", relation.multiplier.to_string("s")},
          {"polynomial", to_string(relation.as_poly)}};
}

json to_json(const Certificate& certificate) {
  json generators = json::array();
  json cofactors = json::array();
  for (const auto& g : certificate.generators) generators.push_back(to_json(g));
  for (const auto& c : certificate.cofactors) cofactors.push_back(to_string(c));
  return {{"input", to_string(certificate.input)},
          {"generators", generators},
          {"cofactors", cofactors},
          {"normal_form", to_string(certificate.normal_form)},
          {"identity_holds", certificate.is_valid()}};
}

json to_json(const Verdict& verdict) {
  return {{"is_member", verdict.is_member},
          {"verdict", verdict.is_member ? "member" : "non-member"},
          {"theorem_basis", verdict.theorem_basis},
          {"certificate", to_json(verdict.certificate)}};
}

json to_json(const VerificationReport& report) {
  json samples = json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"point", complex_to_json(s.point)},
                       {"residual", s.residual},
                       {"scale", s.scale},
                       {"relative_residual", s.relative}});
  }
  return {{"polynomial", report.polynomial},
          {"shifts", report.shifts},
          {"is_member", report.is_member},
          {"seed", report.seed},
          {"tolerance", report.tol},
          {"samples", samples},
          {"max_relative_residual", report.max_relative_residual},
          {"verdict_consistent", report.verdict_consistent}};
}

json to_json(const SelfTestReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"max_error", c.max_error}, {"threshold", c.threshold}});
  }
  return {{"checks", checks},
          {"total", report.checks.size()},
          {"failed", report.failures()},
          {"all_passed", report.all_passed()}};
}

}  // namespace gamma_ideal

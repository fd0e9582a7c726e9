#include "gamma_ideal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "gamma_ideal/errors.hpp"
#include "gamma_ideal/ideal.hpp"
#include "gamma_ideal/json_io.hpp"
#include "gamma_ideal/parser.hpp"

namespace gamma_ideal::cli {

namespace {

std::string format_double(double v, int precision = 17) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  out += z.imag() < 0 ? " - " : " + ";
  out += format_double(std::abs(z.imag())) + "i";
  return out;
}

std::string join_indices(const std::vector<std::size_t>& members) {
  std::string out;
  for (std::size_t k : members) out += (out.empty() ? "" : ", ") + std::to_string(k);
  return "{" + out + "}";
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    std::uint64_t parsed = 0;
    try {
      parsed = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0') throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
    return parsed;
  }
  return 0;
}

SelfTestCheck exact_check(std::string name, bool passed) { return {std::move(name), passed, passed ? 0.0 : 1.0, 0.0}; }

int cmd_classes(const std::string& shifts_text, bool json, std::ostream& out) {
  const ShiftSystem sys(parse_shift_list(shifts_text));
  if (json) {
    print_json(out, to_json(sys));
    return kExitSuccess;
  }
  out << "shifts:";
  for (std::size_t k = 0; k < sys.arity(); ++k) out << (k ? ", " : " ") << "a_" << k << " = " << sys.shift(k);
  out << '\n';
  for (const auto& members : sys.classes()) {
    out << "class " << join_indices(members) << "  representative " << members.front();
    if (members.size() > 1) {
      out << "  offsets";
      for (std::size_t k : members) out << ' ' << sys.offset(k);
    }
    out << '\n';
  }
  out << (sys.in_h() ? "in H: yes (no two shifts differ by an integer)\n"
                     : "in H: no (some shifts differ by an integer)\n");
  return kExitSuccess;
}

struct MemberFlags {
  bool certify = false;
  bool verify = false;
  bool json = false;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

int cmd_member(const std::string& shifts_text, const std::string& poly_text, const MemberFlags& flags,
               std::ostream& out, std::ostream& err) {
  const ShiftSystem sys(parse_shift_list(shifts_text));
  const GammaPoly p = parse_gamma_poly(poly_text, sys.arity());
  const Verdict verdict = decide_membership(p, sys);
  std::optional<VerificationReport> report;
  if (flags.verify) report = verify_verdict(verdict, sys, {flags.samples, flags.seed, flags.tol});

  if (flags.json) {
    nlohmann::json j{{"polynomial", to_string(p)},
                     {"shifts", to_json(sys)["shifts"]},
                     {"is_member", verdict.is_member},
                     {"verdict", verdict.is_member ? "member" : "non-member"},
                     {"normal_form", to_string(verdict.certificate.normal_form)},
                     {"theorem_basis", verdict.theorem_basis}};
    if (flags.certify) j["certificate"] = to_json(verdict.certificate);
    if (report) j["verification"] = to_json(*report);
    print_json(out, j);
  } else {
    out << "verdict: " << (verdict.is_member ? "member" : "non-member") << '\n';
    out << "normal form: " << verdict.certificate.normal_form << '\n';
    out << "basis: " << verdict.theorem_basis << '\n';
    if (flags.certify) {
      const Certificate& cert = verdict.certificate;
      out << "certificate: P = sum of cofactor * generator + normal form\n";
      for (std::size_t k = 0; k < cert.generators.size(); ++k) {
        out << "  generator " << cert.generators[k].as_poly << "\n    cofactor " << cert.cofactors[k] << '\n';
      }
      out << "  normal form " << cert.normal_form << '\n';
      out << "  identity re-expands exactly: " << (cert.is_valid() ? "yes" : "NO") << '\n';
    }
    if (report) {
      out << "numeric check: " << report->samples.size() << " samples, seed " << report->seed << ", tol "
          << format_double(report->tol, 3) << ", max relative residual "
          << format_double(report->max_relative_residual, 3) << ", "
          << (report->verdict_consistent ? "consistent" : "INCONSISTENT") << '\n';
    }
  }
  if (report && !report->verdict_consistent) {
    err << "warning: numeric verification contradicts the symbolic verdict\n";
  }
  return verdict.is_member ? kExitSuccess : kExitNonMember;
}

int cmd_reduce(const std::string& shifts_text, const std::string& poly_text, bool json, std::ostream& out) {
  const ShiftSystem sys(parse_shift_list(shifts_text));
  const GammaPoly p = parse_gamma_poly(poly_text, sys.arity());
  const GammaPoly nf = normal_form(p, sys);
  if (json) print_json(out, {{"polynomial", to_string(p)}, {"normal_form", to_string(nf)}, {"shifts", to_json(sys)["shifts"]}});
  else out << nf << '\n';
  return kExitSuccess;
}

int cmd_gamma(const std::string& arg_text, bool json, std::ostream& out) {
  const Complex s = parse_complex(arg_text);
  const Complex value = gamma_eval(s);
  if (json) print_json(out, {{"argument", complex_to_json(s)}, {"value", complex_to_json(value)}});
  else out << "Gamma(" << format_complex(s) << ") = " << format_complex(value) << '\n';
  return kExitSuccess;
}

int cmd_selftest(bool json, bool inject_fault, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  GammaEvaluator::Coefficients coeffs = GammaEvaluator::standard_coefficients();
  if (inject_fault) coeffs[3] *= 1.0 + 1e-6;
  const SelfTestReport report = run_selftest(GammaEvaluator(coeffs), seed);
  if (json) {
    print_json(out, to_json(report));
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (c.threshold > 0) out << "  (max error " << format_double(c.max_error, 3) << ", limit " << format_double(c.threshold, 3) << ")";
      out << '\n';
    }
    if (report.all_passed()) out << "all " << report.checks.size() << " checks passed\n";
    else out << report.failures() << " of " << report.checks.size() << " checks failed\n";
  }
  for (const auto& c : report.checks) {
    if (!c.passed) err << "selftest failure: " << c.name << " (max error " << format_double(c.max_error, 3) << ")\n";
  }
  return report.all_passed() ? kExitSuccess : kExitFailure;
}

}  // namespace

SelfTestReport run_selftest(const GammaEvaluator& gamma, std::uint64_t seed) {
  SelfTestReport report;
  const ShiftSystem three({0, 1, 2});
  const GammaPoly y = GammaPoly::gamma(3, 0), z = GammaPoly::gamma(3, 1), w = GammaPoly::gamma(3, 2);
  const GammaPoly x = GammaPoly::x(3);
  const GammaPoly one = GammaPoly::constant(3, 1);
  const GammaPoly example = y * w - z * z - y * z;

  const Verdict verdict = decide_membership(example, three);
  report.checks.push_back(exact_check("YW - Z^2 - YZ is an identity for shifts (0, 1, 2)", verdict.is_member));
  report.checks.push_back(exact_check("its certificate re-expands exactly", verdict.certificate.is_valid()));
  report.checks.push_back(exact_check("Y(W - (X+1)Z) + Z(XY - Z) re-expands to YW - Z^2 - YZ",
                                      y * (w - (x + one) * z) + z * (x * y - z) == example));
  {
    const VerificationReport numeric = verify_verdict(verdict, three, {20, seed, 1e-8}, gamma);
    report.checks.push_back({"YW - Z^2 - YZ vanishes numerically", numeric.verdict_consistent,
                             numeric.max_relative_residual, 1e-8});
  }
  report.checks.push_back(exact_check("YW - Z^2 reduces to s*G(0)^2",
                                      to_string(normal_form(y * w - z * z, three)) == "s*G(0)^2"));

  double worst = 0.0;
  bool members = true;
  for (const GaussianRational& a0 : {GaussianRational(0), GaussianRational::ratio(1, 2), GaussianRational::imaginary_unit()}) {
    for (long d = 1; d <= 5; ++d) {
      const ShiftSystem pair({a0, a0 + GaussianRational(d)});
      const Relation rel = generating_relation(pair, 0, 1);
      const Verdict v = decide_membership(rel.as_poly, pair);
      members = members && v.is_member;
      worst = std::max(worst, verify_verdict(v, pair, {20, seed, 1e-8}, gamma).max_relative_residual);
    }
  }
  report.checks.push_back(exact_check("Z - (X+a)...(X+a+d-1)Y is an identity for d = 1..5", members));
  report.checks.push_back({"Z - (X+a)...(X+a+d-1)Y vanishes numerically", worst < 1e-8, worst, 1e-8});

  {
    const ShiftSystem half({0, GaussianRational::ratio(1, 2)});
    const GammaPoly q = GammaPoly::gamma(2, 0) * GammaPoly::gamma(2, 1) - GammaPoly::constant(2, 1);
    const Verdict v = decide_membership(q, half);
    const VerificationReport numeric = verify_verdict(v, half, {20, seed, 1e-8}, gamma);
    report.checks.push_back(exact_check("Gamma(s)Gamma(s+1/2) - 1 is not an identity", !v.is_member));
    report.checks.push_back({"Gamma(s)Gamma(s+1/2) - 1 is numerically nonzero", numeric.verdict_consistent,
                             numeric.max_relative_residual, 1e-8});
  }

  SelfTestOptions options;
  options.seed = seed;
  for (auto& c : selftest_functional_equations(gamma, options).checks) report.checks.push_back(std::move(c));
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide polynomial identities in s and shifted Gamma values Gamma(s + a_k)", "gamma-ideal"};
  app.require_subcommand(1, 1);

  std::string shifts_text, poly_text, complex_text;
  bool json = false;
  MemberFlags flags;
  bool inject_fault = false;
  std::uint64_t seed = 0;

  auto* classes = app.add_subcommand("classes", "Partition shifts into integer-difference classes");
  classes->add_option("shifts", shifts_text, "Comma-separated shifts, e.g. \"0, 1, 1/2, (1+2i)/3\"")->required();
  classes->add_flag("--json", json, "Emit JSON");

  auto* member = app.add_subcommand("member", "Decide whether P(s, G(0), ..., G(n-1)) vanishes identically");
  member->add_option("shifts", shifts_text, "Comma-separated shifts")->required();
  member->add_option("polynomial", poly_text, "Polynomial in s and G(k), e.g. \"G(1) - s*G(0)\"")->required();
  member->add_flag("--certify", flags.certify, "Print the cofactor certificate");
  member->add_flag("--verify", flags.verify, "Cross-check the verdict numerically");
  member->add_option("--samples", flags.samples, "Number of numeric sample points")->default_val(20)->check(CLI::PositiveNumber);
  auto* member_seed = member->add_option("--seed", seed, "Sampling seed (default: $GAMMA_IDEAL_SEED or 0)");
  member->add_option("--tol", flags.tol, "Relative residual tolerance")->default_val(1e-8)->check(CLI::PositiveNumber);
  member->add_flag("--json", json, "Emit JSON");

  auto* reduce = app.add_subcommand("reduce", "Print the normal form modulo the Gamma relations");
  reduce->add_option("shifts", shifts_text, "Comma-separated shifts")->required();
  reduce->add_option("polynomial", poly_text, "Polynomial in s and G(k)")->required();
  reduce->add_flag("--json", json, "Emit JSON");

  auto* gamma = app.add_subcommand("gamma", "Evaluate the complex Gamma function");
  gamma->add_option("--eval", complex_text, "Complex argument, e.g. \"0.5+2i\"")->required();
  gamma->add_flag("--json", json, "Emit JSON");

  auto* selftest = app.add_subcommand("selftest", "Run worked identities and numeric functional-equation checks");
  selftest->add_flag("--json", json, "Emit JSON");
  auto* selftest_seed = selftest->add_option("--seed", seed, "Sampling seed (default: $GAMMA_IDEAL_SEED or 0)");
  selftest->add_flag("--inject-fault", inject_fault, "Perturb one Lanczos coefficient (negative control)")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*classes) return cmd_classes(shifts_text, json, out);
    if (*member) {
      flags.json = json;
      flags.seed = resolve_seed(member_seed, seed);
      return cmd_member(shifts_text, poly_text, flags, out, err);
    }
    if (*reduce) return cmd_reduce(shifts_text, poly_text, json, out);
    if (*gamma) return cmd_gamma(complex_text, json, out);
    if (*selftest) return cmd_selftest(json, inject_fault, resolve_seed(selftest_seed, seed), out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SamplingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gamma_ideal::cli

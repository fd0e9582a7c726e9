// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every tolerance and runtime budget is fixed here.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gamma_ideal/cli.hpp"
#include "gamma_ideal/ideal.hpp"
#include "gamma_ideal/numeric.hpp"
#include "gamma_ideal/parser.hpp"
#include "test_support.hpp"

#ifndef GAMMA_IDEAL_CORPUS
#error "GAMMA_IDEAL_CORPUS must point at tests/data/cli_corpus.txt"
#endif

using namespace gamma_ideal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

GaussianRational q(long num, long den = 1) { return GaussianRational::ratio(num, den); }

// 1. The three-shift identity YW - Z^2 - YZ and its certificates.
Outcome example_two() {
  Outcome o;
  const std::string poly = "G(0)*G(2) - G(1)^2 - G(0)*G(1)";
  const CliResult r = run_cli({"member", "0,1,2", poly, "--certify", "--json"});
  o.require(r.code == 0, "member exit code " + std::to_string(r.code));
  const auto j = nlohmann::json::parse(r.out);
  o.require(j["verdict"] == "member", "verdict is not member");

  // Re-expand the emitted certificate from its text form alone.
  const GammaPoly p = parse_gamma_poly(poly, 3);
  GammaPoly expanded = parse_gamma_poly(j["certificate"]["normal_form"].get<std::string>(), 3);
  const auto& gens = j["certificate"]["generators"];
  const auto& cofs = j["certificate"]["cofactors"];
  o.require(gens.size() == cofs.size() && !gens.empty(), "malformed certificate");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    expanded += parse_gamma_poly(cofs[k].get<std::string>(), 3) *
                parse_gamma_poly(gens[k]["polynomial"].get<std::string>(), 3);
  }
  o.require(expanded == p, "emitted certificate does not re-expand to P");

  const GammaPoly y = GammaPoly::gamma(3, 0), z = GammaPoly::gamma(3, 1), w = GammaPoly::gamma(3, 2);
  const GammaPoly x = GammaPoly::x(3), one = GammaPoly::constant(3, 1);
  o.require(y * (w - (x + one) * z) + z * (x * y - z) == p, "published decomposition does not re-expand");
  return o;
}

// 2. Z - (X+a0)...(X+a0+d-1) Y for d = 1..5 and a0 in {0, 1/2, i}.
Outcome example_one() {
  Outcome o;
  for (const GaussianRational& a0 : {GaussianRational(0), q(1, 2), GaussianRational::imaginary_unit()}) {
    for (long d = 1; d <= 5; ++d) {
      const ShiftSystem sys({a0, a0 + GaussianRational(d)});
      GammaPoly g = GammaPoly::gamma(2, 1);
      UniPoly mult(1);
      for (long k = 0; k < d; ++k) mult *= UniPoly::linear(a0 + GaussianRational(k));
      g -= GammaPoly::term(Monomial({1, 0}), mult);
      const Verdict v = decide_membership(g, sys);
      const std::string tag = "a0=" + a0.to_string() + " d=" + std::to_string(d);
      o.require(v.is_member, tag + " not a member");
      const VerificationReport r = verify_verdict(v, sys, {20, static_cast<std::uint64_t>(d), 1e-8});
      o.require(r.samples.size() == 20 && r.max_relative_residual < 1e-8,
                tag + " residual " + std::to_string(r.max_relative_residual));
    }
  }
  return o;
}

// 3. Random members decide member and vanish numerically.
Outcome soundness_sweep() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 4, 3, 4, true);
    const GammaPoly p = random_member(sys, t);  // cofactor heights <= 2
    const Verdict v = decide_membership(p, sys);
    o.require(v.is_member, "random member " + std::to_string(t) + " decided non-member");
    const VerificationReport r = verify_verdict(v, sys, {20, t, 1e-8});
    o.require(r.verdict_consistent, "random member " + std::to_string(t) + " residual " +
                                        std::to_string(r.max_relative_residual));
  }
  return o;
}

// 4. Nonzero normal forms are visibly nonzero at some sample.
Outcome completeness_evidence() {
  Outcome o;
  std::mt19937_64 rng(4048);
  int done = 0;
  while (done < 200) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 4, 3, 4);
    const GammaPoly p = random_nonzero_gamma_poly(sys.arity(), rng);
    const Verdict v = decide_membership(p, sys);
    if (v.is_member) continue;
    const VerificationReport r = verify_verdict(v, sys, {20, static_cast<std::uint64_t>(done), 1e-8});
    o.require(r.verdict_consistent, "inconsistency flagged for " + to_string(p));
    o.require(r.max_relative_residual > 1e-4, "no sample above 1e-4 for " + to_string(p));
    ++done;
  }
  return o;
}

// 5. Highest-term formula, Euclidean round trip, normal-form idempotence and linearity.
Outcome proof_machinery() {
  Outcome o;
  std::mt19937_64 rng(8096);
  for (int t = 0; t < 500; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 4, 3, 4);
    const GammaPoly poly = random_nonzero_gamma_poly(sys.arity(), rng);
    const HighestTerm before = highest_term(poly);
    UniPoly expected = test_support::shift_by_one(before.coefficient);
    for (std::size_t m = 0; m < sys.arity(); ++m)
      for (unsigned e = 0; e < before.monomial[m]; ++e) expected *= UniPoly::linear(sys.shift(m));
    const HighestTerm after = highest_term(shift_apply(poly, sys));
    o.require(after.monomial == before.monomial && after.coefficient == expected, "highest-term formula");
  }

  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  std::uniform_int_distribution<int> deg(0, 7);
  auto draw = [&](int d) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    return UniPoly(std::move(c));
  };
  for (int t = 0; t < 500; ++t) {
    const UniPoly n = draw(deg(rng));
    UniPoly d = draw(deg(rng));
    if (d.is_zero()) d = UniPoly(1);
    const auto [quot, rem] = euclid_divide(n, d);
    o.require(quot * d + rem == n, "euclid round trip");
    o.require(rem.is_zero() || *rem.degree() < *d.degree(), "remainder degree");
  }

  for (int t = 0; t < 500; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 4, 3, 4);
    const GammaPoly a = random_gamma_poly(sys.arity(), rng), b = random_gamma_poly(sys.arity(), rng);
    const GammaPoly na = normal_form(a, sys), nb = normal_form(b, sys);
    o.require(normal_form(na, sys) == na, "normal form idempotence");
    o.require(normal_form(a + b, sys) == na + nb, "normal form additivity");
    o.require(normal_form(a * b, sys) == normal_form(na * nb, sys), "normal form multiplicativity");
  }
  return o;
}

// 6. Gamma evaluator against its functional identities.
Outcome numeric_oracle() {
  Outcome o;
  SelfTestOptions options;
  options.seed = 12;
  options.functional_samples = 100;
  options.multiplication_samples = 50;
  const SelfTestReport report = selftest_functional_equations(GammaEvaluator(), options);
  for (const auto& c : report.checks) {
    o.require(c.passed, c.name + " max error " + std::to_string(c.max_error));
  }
  const Complex half = gamma_eval(0.5);
  o.require(std::abs(half * half - std::numbers::pi) / std::numbers::pi < 1e-12, "Gamma(1/2)^2");
  double f = 1.0;
  for (int k = 1; k <= 10; ++k) {
    if (k > 1) f *= k - 1;
    o.require(std::abs(gamma_eval(static_cast<double>(k)) - f) / f < 1e-12, "Gamma(" + std::to_string(k) + ")");
  }
  return o;
}

// 7. Shifts (0, a, 2a) with a in {3/7, i, (1+i)/2}: no relations at all.
Outcome corollary_instance() {
  Outcome o;
  std::mt19937_64 rng(77);
  const GaussianRational alphas[] = {q(3, 7), GaussianRational::imaginary_unit(),
                                     GaussianRational(mpq_class(1, 2), mpq_class(1, 2))};
  for (const auto& alpha : alphas) {
    const ShiftSystem sys({0, alpha, alpha + alpha});
    o.require(sys.in_h() && sys.classes().size() == 3, "alpha=" + alpha.to_string() + " not all singletons");
    for (int t = 0; t < 50; ++t) {
      const GammaPoly p = random_nonzero_gamma_poly(3, rng);
      o.require(!decide_membership(p, sys).is_member, "nonzero polynomial decided member: " + to_string(p));
    }
  }
  return o;
}

// 8. CLI exit codes, JSON stability and print/parse round trip on the corpus.
Outcome cli_contract() {
  Outcome o;
  std::ifstream in(GAMMA_IDEAL_CORPUS);
  o.require(in.good(), "cannot open corpus");
  std::string line;
  int entries = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto a = line.find(';'), b = line.rfind(';');
    const std::string shifts = line.substr(0, a);
    const std::string poly = line.substr(a + 1, b - a - 1);
    const int expected = std::stoi(line.substr(b + 1));
    ++entries;

    const CliResult plain = run_cli({"member", shifts, poly});
    o.require(plain.code == expected, "exit " + std::to_string(plain.code) + " for " + line);

    const std::vector<std::string> json_args{"member", shifts, poly, "--certify", "--verify", "--json"};
    const CliResult first = run_cli(json_args);
    const CliResult second = run_cli(json_args);
    o.require(first.code == expected, "json exit code for " + line);
    o.require(first.out == second.out, "json output not deterministic for " + line);
    const auto j = nlohmann::json::parse(first.out);
    o.require(j.dump(2) + "\n" == first.out, "json not stable under re-serialization for " + line);
    o.require(j["verification"]["verdict_consistent"].get<bool>(), "numeric inconsistency for " + line);

    const std::size_t n = parse_shift_list(shifts).size();
    const GammaPoly p = parse_gamma_poly(poly, n);
    const std::string printed = to_string(p);
    o.require(parse_gamma_poly(printed, n) == p, "round trip failed for " + line);
    o.require(j["polynomial"] == printed, "printed form mismatch for " + line);
  }
  o.require(entries == 50, "corpus has " + std::to_string(entries) + " entries, expected 50");

  o.require(run_cli({"classes", "0,0"}).code == 2, "duplicate shifts must exit 2");
  o.require(run_cli({"member", "0,1", "G(2)"}).code == 2, "bad index must exit 2");
  o.require(run_cli({"member", "0,1", "G(0) +"}).code == 2, "syntax error must exit 2");
  o.require(run_cli({"selftest"}).code == 0, "selftest must exit 0");
  o.require(run_cli({"selftest", "--inject-fault"}).code == 1, "faulty selftest must exit 1");
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 three-shift identity and certificates", 1.0, example_two},
      {"AC2 functional-equation generators d=1..5", 1.0, example_one},
      {"AC3 soundness sweep (200 random members)", 30.0, soundness_sweep},
      {"AC4 completeness evidence (200 non-members)", 30.0, completeness_evidence},
      {"AC5 highest-term / division / normal-form properties", 30.0, proof_machinery},
      {"AC6 numeric Gamma oracle", 5.0, numeric_oracle},
      {"AC7 rational/complex spacing has no relations", 10.0, corollary_instance},
      {"AC8 CLI contract on 50-expression corpus", 5.0, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds >= c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "over runtime budget";
    }
    std::printf("[%s] %s  (%.3f s, budget %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.name, seconds,
                c.budget_seconds, outcome.ok ? "" : "  ", outcome.detail.c_str());
    failures += outcome.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}

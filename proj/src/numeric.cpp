#include "gamma_ideal/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

PoleError::PoleError(std::complex<double> argument, long pole)
    : DomainError([&] {
        std::ostringstream os;
        os << "Gamma argument (" << argument.real() << ", " << argument.imag() << ") is too close to the pole at "
           << pole;
        return os.str();
      }()),
      argument_(argument),
      pole_(pole) {}

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kPi = std::numbers::pi;

// sin(pi z), reducing Re z by the nearest integer first so the result keeps
// full relative accuracy close to the zeros.
Complex sin_pi(Complex z) {
  const double k = std::round(z.real());
  const Complex r = std::sin(kPi * (z - k));
  return std::fmod(std::abs(k), 2.0) == 1.0 ? -r : r;
}

double relative_error(Complex got, Complex want) {
  const double denom = std::abs(want);
  return denom == 0.0 ? std::abs(got) : std::abs(got - want) / denom;
}

}  // namespace

const GammaEvaluator::Coefficients& GammaEvaluator::standard_coefficients() {
  static const Coefficients kCoefficients{
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  return kCoefficients;
}

PoleDistance nearest_pole(Complex s) {
  const double k = std::min(0.0, std::round(s.real()));
  return {std::abs(s - k), static_cast<long>(k)};
}

Complex GammaEvaluator::lanczos(Complex s) const {
  const Complex z = s - 1.0;
  Complex series = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) series += coeffs_[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * series;
}

Complex GammaEvaluator::via_reflection(Complex s) const { return kPi / (sin_pi(s) * lanczos(1.0 - s)); }

Complex GammaEvaluator::operator()(Complex s) const {
  const PoleDistance near = nearest_pole(s);
  if (near.distance < pole_clearance_) throw PoleError(s, near.pole);
  return s.real() < 0.5 ? via_reflection(s) : lanczos(s);
}

Complex gamma_eval(Complex s) {
  static const GammaEvaluator kGamma;
  return kGamma(s);
}

double PolyValue::relative_residual() const { return scale == 0.0 ? 0.0 : std::abs(value) / scale; }

PolyValue evaluate_poly(const GammaPoly& p, const ShiftSystem& sys, Complex s, const GammaEvaluator& gamma) {
  if (p.arity() != sys.arity()) throw UsageError("evaluate_poly: polynomial arity does not match shift count");
  std::vector<Complex> gamma_values;
  gamma_values.reserve(sys.arity());
  for (const auto& a : sys.shifts()) gamma_values.push_back(gamma(s + a.to_complex()));

  PolyValue out{0.0, 0.0};
  for (const auto& [m, coeff] : p.terms()) {
    Complex product = 1.0;
    for (std::size_t k = 0; k < m.arity(); ++k)
      for (Monomial::Exponent e = 0; e < m[k]; ++e) product *= gamma_values[k];
    Complex s_power = 1.0;
    for (const auto& c : coeff.coefficients()) {
      if (!c.is_zero()) {
        const Complex summand = c.to_complex() * s_power * product;
        out.value += summand;
        out.scale += std::abs(summand);
      }
      s_power *= s;
    }
  }
  return out;
}

std::vector<Complex> draw_samples(const ShiftSystem& sys, std::size_t count, std::uint64_t seed, double clearance,
                                  const SampleDomain& domain) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(domain.re_min, domain.re_max);
  std::uniform_real_distribution<double> im(domain.im_min, domain.im_max);
  std::vector<Complex> shifts;
  for (const auto& a : sys.shifts()) shifts.push_back(a.to_complex());

  std::vector<Complex> out;
  out.reserve(count);
  const std::size_t max_attempts = 1000 * count + 1000;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw SamplingError("could not draw " + std::to_string(count) + " pole-clear sample points in " +
                          std::to_string(max_attempts) + " attempts");
    }
    const double x = re(rng);
    const double y = im(rng);
    const Complex s{x, y};
    const bool clear = std::all_of(shifts.begin(), shifts.end(),
                                   [&](Complex a) { return nearest_pole(s + a).distance >= clearance; });
    if (clear) out.push_back(s);
  }
  return out;
}

VerificationReport verify_verdict(const Verdict& verdict, const ShiftSystem& sys, const VerifyOptions& options,
                                  const GammaEvaluator& gamma) {
  const GammaPoly& p = verdict.certificate.input;
  VerificationReport report;
  report.polynomial = to_string(p);
  for (const auto& a : sys.shifts()) report.shifts.push_back(a.to_string());
  report.is_member = verdict.is_member;
  report.seed = options.seed;
  report.tol = options.tol;

  for (Complex s : draw_samples(sys, options.samples, options.seed, gamma.pole_clearance())) {
    const PolyValue v = evaluate_poly(p, sys, s, gamma);
    const SampleResult r{s, std::abs(v.value), v.scale, v.relative_residual()};
    report.max_relative_residual = std::max(report.max_relative_residual, r.relative);
    report.samples.push_back(r);
  }
  if (verdict.is_member) {
    report.verdict_consistent = report.max_relative_residual < options.tol;
  } else {
    report.verdict_consistent = report.samples.empty() || report.max_relative_residual >= options.tol;
  }
  return report;
}

bool SelfTestReport::all_passed() const { return failures() == 0; }

std::size_t SelfTestReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

namespace {

SelfTestCheck make_check(std::string name, double max_error, double threshold) {
  // NaN errors must fail.
  return {std::move(name), max_error < threshold, max_error, threshold};
}

}  // namespace

SelfTestReport selftest_functional_equations(const GammaEvaluator& gamma, const SelfTestOptions& options) {
  SelfTestReport report;
  auto worst = [](double current, double e) { return std::isnan(e) || std::isnan(current) ? NAN : std::max(current, e); };

  {
    const ShiftSystem both({0, 1});
    double max_error = 0.0;
    for (Complex s : draw_samples(both, options.functional_samples, options.seed + 1, gamma.pole_clearance())) {
      const Complex next = gamma(s + 1.0);
      max_error = worst(max_error, relative_error(s * gamma(s), next));
    }
    report.checks.push_back(make_check("functional equation Gamma(s+1) = s Gamma(s)", max_error, 1e-10));
  }

  for (long n : {2L, 3L}) {
    std::vector<GaussianRational> fractions;
    for (long j = 0; j < n; ++j) fractions.push_back(GaussianRational::ratio(j, n));
    const ShiftSystem sys(fractions);
    const double nd = static_cast<double>(n);
    double max_error = 0.0;
    for (Complex s : draw_samples(sys, options.multiplication_samples, options.seed + 1 + static_cast<std::uint64_t>(n),
                                  gamma.pole_clearance())) {
      Complex rhs = std::exp((nd * s - 0.5) * std::log(nd)) * std::pow(2.0 * kPi, (1.0 - nd) / 2.0);
      for (long j = 0; j < n; ++j) rhs *= gamma(s + static_cast<double>(j) / nd);
      max_error = worst(max_error, relative_error(rhs, gamma(nd * s)));
    }
    report.checks.push_back(
        make_check("multiplication theorem n=" + std::to_string(n), max_error, 1e-8));
  }

  {
    std::mt19937_64 rng(options.seed + 7);
    std::uniform_real_distribution<double> re(0.5, 1.0);
    std::uniform_real_distribution<double> im(-3.0, 3.0);
    double max_error = 0.0;
    for (std::size_t k = 0; k < options.reflection_samples; ++k) {
      const Complex s{re(rng), im(rng)};
      max_error = worst(max_error, relative_error(gamma.via_reflection(s), gamma.lanczos(s)));
    }
    report.checks.push_back(make_check("reflection formula agrees with series on 0.5 < Re s < 1", max_error, 1e-10));
  }

  {
    const Complex half = gamma(0.5);
    report.checks.push_back(make_check("Gamma(1/2)^2 = pi", relative_error(half * half, kPi), 1e-12));
  }

  {
    double max_error = 0.0;
    double factorial = 1.0;
    for (int k = 1; k <= 10; ++k) {
      if (k > 1) factorial *= static_cast<double>(k - 1);
      max_error = worst(max_error, relative_error(gamma(static_cast<double>(k)), factorial));
    }
    report.checks.push_back(make_check("Gamma(k) = (k-1)! for k = 1..10", max_error, 1e-12));
  }
  return report;
}

}  // namespace gamma_ideal

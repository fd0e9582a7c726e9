#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gamma_ideal {

/// Caller passed inputs that violate an operation's preconditions
/// (arity mismatch, duplicate shifts, unrelated indices, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request: zero divisor, highest term of zero,
/// Gamma evaluated at a pole.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : UsageError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class PoleError : public DomainError {
 public:
  PoleError(std::complex<double> argument, long pole);

  std::complex<double> argument() const noexcept { return argument_; }
  long pole() const noexcept { return pole_; }

 private:
  std::complex<double> argument_;
  long pole_;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gamma_ideal

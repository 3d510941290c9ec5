#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace oscsum {

// Argument outside the mathematical domain of an operation (q <= 1 for
// gamma_q, t outside (0,1) for the Fresnel integral, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A checkable hypothesis of a lemma does not hold for the given input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact integer arithmetic would not fit in the requested width.
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, int required_bits)
      : std::overflow_error(what), required_bits_(required_bits) {}

  int required_bits() const noexcept { return required_bits_; }

 private:
  int required_bits_;
};

// Resolution-doubling quadrature hit its cap without two levels agreeing.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> previous,
                   std::complex<double> last)
      : std::runtime_error(what), previous_(previous), last_(last) {}

  std::complex<double> previous() const noexcept { return previous_; }
  std::complex<double> last() const noexcept { return last_; }

 private:
  std::complex<double> previous_;
  std::complex<double> last_;
};

class NoCriticalPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscsum

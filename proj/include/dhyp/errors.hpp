#pragma once

#include <stdexcept>
#include <string>

namespace dhyp {

/// Argument outside the domain an operation is defined on (poles, bad
/// parameter ranges, points outside the characteristic triangle).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or iteration failed to converge within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Goursat data violating the corner condition phi_a(b) == phi_b(a), or
/// Cauchy-Goursat data with a nonzero value at the anchoring corner.
class CompatibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampler was asked for a derivative it cannot provide.
class DerivativeUnavailable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dhyp

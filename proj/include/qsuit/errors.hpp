#pragma once

#include <stdexcept>
#include <string>

namespace qsuit {

// Two values live on incompatible Hilbert spaces, or a matrix exceeds the
// configured dimension cap.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument is outside the operation's domain (empty state list, negative
// width, invalid bit index, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Fock-space truncation leaves more tail mass than the tolerance allows.
// Carries the order that would have been sufficient.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_n_max)
      : std::runtime_error(what), required_n_max_(required_n_max) {}
  int required_n_max() const noexcept { return required_n_max_; }

 private:
  int required_n_max_;
};

// Suitability against a target with vanishing self-fidelity.
class DegenerateTargetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A ratio whose denominator is zero by construction (vacuum source, empty
// detection record, strategy without the required channel).
class UndefinedRatioError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative solver ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration text could not be parsed; carries the offending key path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(key.empty() ? what : key + ": " + what),
        key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace qsuit

#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

/// Violated precondition on arguments (bad H, u == v in phi, empty grid...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature that did not reach its tolerance. Carries the achieved error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : std::runtime_error(what + " (error estimate " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulation or solver configuration that cannot meet its stated accuracy.
class ConfigurationError : public std::runtime_error {
 public:
  ConfigurationError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  explicit ConfigurationError(const std::string& what) : ConfigurationError(what, 0.0) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegrandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes to the same quantity disagree.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double a, double b)
      : std::runtime_error(what + ": " + std::to_string(a) + " vs " + std::to_string(b)),
        first_(a), second_(b) {}
  double first() const noexcept { return first_; }
  double second() const noexcept { return second_; }

 private:
  double first_;
  double second_;
};

/// Hypothesis (H) or the limiting-measure condition does not hold.
class ConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace volterra

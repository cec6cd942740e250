#pragma once

#include <stdexcept>
#include <string>

namespace ptrack {

/// Violation of the phase space (v <= 0, a <= 0, lambda outside [0,1]) or of
/// an operation's argument domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A state handed to the composite wave is not on the left phase.
class PhaseSideError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar root-finder failed to converge. Carries the final bracket.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Configuration text could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

/// The simulation hit its event budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A monitored inequality failed while running in enforcing mode.
class MonitorViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptrack

namespace ptrack {

/// Bad command-line usage (unknown suite, non-increasing nu list, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ptrack

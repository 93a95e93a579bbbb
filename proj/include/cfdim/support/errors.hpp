#pragma once

#include <stdexcept>
#include <string>

namespace cfdim {

/// Base for every failure raised by the library. Subclasses map onto the
/// CLI exit codes: validation errors exit 2, numerical/budget failures exit 3.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied parameters was violated.
class validation_error : public error {
 public:
  using error::error;
};

/// Parameters outside the mathematical domain of a formula (poles, s <= 1/2 ...).
class domain_error : public validation_error {
 public:
  using validation_error::validation_error;
};

/// A certified expansion ran out of precision before the requested digit.
class precision_exhausted : public error {
 public:
  precision_exhausted(std::string what, std::size_t certified)
      : error(std::move(what)), certified_(certified) {}
  std::size_t certified_digits() const noexcept { return certified_; }

 private:
  std::size_t certified_;
};

/// Enumeration would exceed the configured work budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

/// The root-finding bracket does not contain a sign change.
class bracket_failure : public error {
 public:
  using error::error;
};

/// An iterative approximation did not meet its tolerance.
class non_convergence : public error {
 public:
  using error::error;
};

}  // namespace cfdim

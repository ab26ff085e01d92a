#pragma once

#include <stdexcept>
#include <string>

namespace gcw {

// Exit-code classes used by the CLI: usage (2), precondition (3), failure (1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold; `witness` names the offending object.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::string witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A theorem-backed assertion failed on a concrete instance.
class ImplementationContradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace gcw

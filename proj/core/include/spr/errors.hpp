#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `location` is a human-readable position ("byte 17",
/// "students[1].prefs").
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string location)
      : Error(what + " (at " + location + ")"), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Structurally parsed input that breaks one or more domain invariants.
class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "invalid instance:";
    for (const auto& i : issues) out += "\n  - " + i;
    return out;
  }
  std::vector<std::string> issues_;
};

/// A caller handed an argument that violates an operation's precondition
/// (an infeasible pair to a verifier, a non-permutation order, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An exhaustive procedure would exceed its configured work or memory guard.
/// Never used to signal "no solution".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace spr

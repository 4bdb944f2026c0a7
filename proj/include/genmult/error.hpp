#pragma once

#include <stdexcept>
#include <string>

namespace genmult {

/// Malformed or out-of-contract input (bad document, precondition failure).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same quantity disagreed.
class CrossCheckError : public std::runtime_error {
 public:
  CrossCheckError(std::string check, const std::string& message)
      : std::runtime_error(check + ": " + message), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace genmult

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spheres {

// Malformed values at an API boundary: empty sequences, nonpositive
// entries, structures that fail their own invariants.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A stated precondition of an operation does not hold (caller bug).
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// The decision conditions reject the input; carries which one failed
// ("length", "tree-like", "parity", "triangle").
class UnrealizableError : public std::runtime_error {
 public:
  UnrealizableError(std::string condition, const std::string& what)
      : std::runtime_error(what), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// A certificate handed to a construction step cannot be extended.
struct InvalidCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spheres

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace desire {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad files, unknown identifiers, violated preconditions.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : Error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

// A request exceeds a configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An operation needing a consistent argument received an inconsistent one.
// The witness is rendered by the caller because its type depends on the module.
class InconsistencyError : public Error {
 public:
  InconsistencyError(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace desire

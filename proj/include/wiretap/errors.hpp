#pragma once

#include <stdexcept>
#include <string>

namespace wiretap {

/// Malformed edge-list or distribution input. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(std::move(message)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An operation that requires a connected graph was given a disconnected one.
class DisconnectedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural assumption is violated (opt = 1 for the nucleolus, fewer
/// than three vertices for the spanning connectivity game).
class AssumptionViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle was asked to enumerate past its configured cap.
class OracleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wiretap

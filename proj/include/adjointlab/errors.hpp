#pragma once

#include <stdexcept>
#include <string>

namespace adjointlab {

// Malformed textual input (edge lists, graph6, CLI values).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A computation was asked to run above its configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int requested, int cap)
      : std::runtime_error(what + ": n=" + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

// Input is well-formed but the operation is undefined on it (e.g. edgeless
// graph where an edge is required).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation requires a connected graph.
class NotConnected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cited theorem was contradicted by an exact computation.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace adjointlab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsd {

/// Malformed or out-of-contract input (bad edge list, wrong coloring length, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graph6 / edge-list / coloring text could not be decoded.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The graph does not satisfy a construction's precondition (e.g. max degree > 4).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An algorithmic invariant that should be guaranteed was observed to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nsd

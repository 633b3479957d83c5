#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace listobs {

// Malformed arguments supplied by a caller (bad vertex index, bad pattern name).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A construction would exceed the 128-vertex graph capacity.
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

// A search exceeded its termination guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace listobs

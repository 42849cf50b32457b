#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apx {

// Malformed graph6 input. offset is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// More vertices than a Graph row can hold.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An operation precondition on graph structure does not hold
// (e.g. nearness on a graph that does not simplify to K5 or K3,3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace apx

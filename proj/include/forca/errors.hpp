#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forca {

/// Syntax error in a polynomial or scalar expression; `pos` is the
/// byte offset into the input where scanning stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// A configured engine cap (pair count, basis size, degree) was hit.
/// Distinct from any mathematical verdict: callers must not interpret
/// this as a negative answer.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Operands belong to different ring contexts.
class RingMismatchError : public std::invalid_argument {
 public:
  RingMismatchError() : std::invalid_argument("mixed ring contexts") {}
};

}  // namespace forca

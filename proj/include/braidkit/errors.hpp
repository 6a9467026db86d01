#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidkit {

/// Malformed braid word text. `position` is the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A generator index does not fit the declared strand count.
class IndexRangeError : public std::out_of_range {
 public:
  IndexRangeError(const std::string& token, int strands)
      : std::out_of_range("index out of range in '" + token + "' for m=" +
                          std::to_string(strands)),
        token_(token) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class StrandMismatch : public std::invalid_argument {
 public:
  StrandMismatch(int lhs, int rhs)
      : std::invalid_argument("strand count mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// Raised when a computed result fails one of its own certificates.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braidkit

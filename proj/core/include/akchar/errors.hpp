#pragma once

#include <stdexcept>
#include <string>

namespace akchar {

/// Operands live in different rings (number of u-variables, cyclotomic
/// modulus or truncation order disagree).
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace akchar

#pragma once

#include <stdexcept>
#include <string>

namespace onsager {

/// Exact-arithmetic failure: division by zero, inverting a non-unit.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation of a Laurent polynomial at zero where a negative power occurs.
class PoleError : public ArithmeticError {
 public:
  explicit PoleError(const std::string& what) : ArithmeticError(what) {}
};

/// Malformed caller input: bad leg indices, unparsable expressions, bad CLI values.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace onsager

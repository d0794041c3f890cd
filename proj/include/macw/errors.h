#ifndef MACW_ERRORS_H_
#define MACW_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

#include "macw/rational.h"

namespace macw {

// Malformed or inconsistent user input: bad field parameters, entries outside
// the field, rank-deficient generators, invalid distributions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands drawn from two different fields.
class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

// A distribution handed to the MacWilliams transform that cannot be the
// weight distribution of a dual code.
class TransformError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                   what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Brute-force enumeration would visit more than the configured number of
// codewords.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const Integer& requested, const Integer& cap)
      : std::runtime_error("enumeration of " + requested.get_str() +
                           " codewords exceeds the cap of " + cap.get_str() +
                           " (raise it with --max-enum)"),
        requested_(requested),
        cap_(cap) {}

  const Integer& requested() const { return requested_; }
  const Integer& cap() const { return cap_; }

 private:
  Integer requested_;
  Integer cap_;
};

}  // namespace macw

#endif  // MACW_ERRORS_H_

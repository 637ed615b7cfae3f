#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twmis {

// Malformed input text. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A caller broke a documented precondition (out-of-range vertex, non-nice input, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A tree decomposition that fails one of the three decomposition properties.
class InvalidDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A black-box solver declined an instance outside its validity envelope.
class BoxRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twmis

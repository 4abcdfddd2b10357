#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbwelim {

// Raised when a configured cap (rewrite steps, basis size, degree bound,
// enumeration size) is exceeded. Maps to CLI exit code 3.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed input text. Maps to CLI exit code 2; `line` is 1-based and 0
// when no line is meaningful.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pbwelim

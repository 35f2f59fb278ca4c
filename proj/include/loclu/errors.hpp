#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loclu {

// Invalid user-supplied data or configuration.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : InvalidInput {
  ParseError(const std::string& what, std::size_t line_no)
      : InvalidInput("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  std::size_t line;
};

}  // namespace loclu

#pragma once

#include <stdexcept>
#include <string>

namespace ppdiv {

// Sieve/factoring budget exceeded.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A constructor hypothesis does not hold; message names the failed hypothesis.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, long line) : std::runtime_error(what), line(line) {}
  long line;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ppdiv

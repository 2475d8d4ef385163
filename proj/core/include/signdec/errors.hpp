#pragma once

#include <stdexcept>
#include <string>

namespace signdec {

// Malformed quiver file. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A structure the explicit representation engine cannot handle
// (valued edges, D/E shapes, non-Dynkin components).
class UnsupportedComponent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace signdec

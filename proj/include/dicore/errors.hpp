#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dicore {

// Malformed digraph text. line is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : std::runtime_error((source.empty() ? std::string() : source + ": ") +
                           (line == 0 ? detail : "line " + std::to_string(line) + ": " + detail)),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// An operation refused because its input exceeds a documented size cap.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dicore

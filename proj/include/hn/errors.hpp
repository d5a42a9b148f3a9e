#pragma once

#include <stdexcept>
#include <string>

namespace hn {

// Domain-rule violation (undefined slope, invalid polygon, unmet slope-order
// precondition, ...). `kind` is a stable machine-readable tag; the CLI maps
// these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Malformed text input, with the character position of the offending token.
// The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, std::size_t position)
      : std::runtime_error(detail + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hn

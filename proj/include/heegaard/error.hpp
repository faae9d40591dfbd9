#pragma once

#include <stdexcept>
#include <string>

namespace heegaard {

/// Raised for data that violates a structural invariant (bad gluing, inconsistent
/// crossings, non-embeddable chords, wrong Euler characteristic, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(int line, int column, const std::string& message)
      : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace heegaard

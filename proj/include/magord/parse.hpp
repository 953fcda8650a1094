#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "magord/word.hpp"

namespace magord {

/// Error in user-supplied text, annotated with a 1-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int column)
      : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Word grammar: generators `x1`, `x2`, ...; powers `x2^3`, inverses
/// `x1^-1`; `1` for the identity; factors juxtaposed with whitespace or `*`.
Word parse_word(const std::string& text, int rank);

/// A generator occurrence in a tower: factor index, generator, exponent.
struct TowerGen {
  int factor = 1;
  int gen = 1;
  long long exp = 1;

  friend bool operator==(const TowerGen&, const TowerGen&) = default;
};

/// Tower word grammar: `g<i>.<p>` optionally with `^<exp>`, same separators
/// as plain words; `1` for the identity.
std::vector<TowerGen> parse_tower_word(const std::string& text);

}  // namespace magord

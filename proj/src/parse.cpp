#include "magord/parse.hpp"

#include <cctype>

namespace magord {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_separators() {
    while (!done() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*'))
      ++pos;
  }

  long long integer(const char* what) {
    size_t start = pos;
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, column());
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (1LL << 40))
        throw ParseError("number too large", static_cast<int>(start) + 1);
      ++pos;
    }
    return neg ? -v : v;
  }

  long long exponent_or_one() {
    if (!done() && peek() == '^') {
      ++pos;
      long long e = integer("exponent after '^'");
      return e;
    }
    return 1;
  }
};

}  // namespace

Word parse_word(const std::string& text, int rank) {
  Cursor c{text};
  std::vector<Syllable> raw;
  c.skip_separators();
  while (!c.done()) {
    if (c.peek() == '1') {
      ++c.pos;
    } else if (c.peek() == 'x') {
      int col = c.column();
      ++c.pos;
      long long g = c.integer("generator index after 'x'");
      if (g < 1 || g > rank)
        throw ParseError("generator x" + std::to_string(g) +
                             " out of range for rank " + std::to_string(rank),
                         col);
      long long e = c.exponent_or_one();
      if (e != 0) raw.push_back({static_cast<int>(g), e});
    } else {
      throw ParseError(std::string("unexpected character '") + c.peek() + "'",
                       c.column());
    }
    c.skip_separators();
  }
  return Word(rank, raw);
}

std::vector<TowerGen> parse_tower_word(const std::string& text) {
  Cursor c{text};
  std::vector<TowerGen> out;
  c.skip_separators();
  while (!c.done()) {
    if (c.peek() == '1') {
      ++c.pos;
    } else if (c.peek() == 'g') {
      ++c.pos;
      long long f = c.integer("factor index after 'g'");
      if (c.done() || c.peek() != '.')
        throw ParseError("expected '.' after factor index", c.column());
      ++c.pos;
      long long g = c.integer("generator index after '.'");
      long long e = c.exponent_or_one();
      if (f < 1 || g < 1)
        throw ParseError("tower generator indices are 1-based", c.column());
      if (e != 0) out.push_back({static_cast<int>(f), static_cast<int>(g), e});
    } else {
      throw ParseError(std::string("unexpected character '") + c.peek() + "'",
                       c.column());
    }
    c.skip_separators();
  }
  return out;
}

}  // namespace magord

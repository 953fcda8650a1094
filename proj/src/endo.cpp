#include "magord/endo.hpp"

#include <sstream>
#include <stdexcept>

#include "magord/parse.hpp"

namespace magord {

EndoTable::EndoTable(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw std::invalid_argument("endomorphism rank must be positive");
  if (images_.size() != static_cast<size_t>(rank))
    throw std::invalid_argument("endomorphism table needs one image per generator");
  for (const auto& w : images_)
    if (w.rank() != rank)
      throw std::invalid_argument("endomorphism image rank mismatch");
}

EndoTable EndoTable::identity(int rank) {
  std::vector<Word> imgs;
  imgs.reserve(static_cast<size_t>(rank));
  for (int j = 1; j <= rank; ++j) imgs.push_back(Word::generator(rank, j));
  return EndoTable(rank, std::move(imgs));
}

const Word& EndoTable::image(int gen) const {
  if (gen < 1 || gen > rank_)
    throw std::out_of_range("generator index out of range");
  return images_[static_cast<size_t>(gen - 1)];
}

bool EndoTable::is_identity() const {
  for (int j = 1; j <= rank_; ++j) {
    const Word& w = images_[static_cast<size_t>(j - 1)];
    if (w.syllables().size() != 1 || w.syllables()[0].gen != j ||
        w.syllables()[0].exp != 1)
      return false;
  }
  return true;
}

Word EndoTable::apply(const Word& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("endomorphism applied to word of wrong rank");
  Word out = Word::identity(rank_);
  for (const auto& s : w.syllables())
    out = multiply(out, power(image(s.gen), s.exp));
  return out;
}

EndoTable compose(const EndoTable& s, const EndoTable& t) {
  if (s.rank() != t.rank())
    throw std::invalid_argument("endomorphism rank mismatch in compose");
  std::vector<Word> imgs;
  imgs.reserve(static_cast<size_t>(t.rank()));
  for (int j = 1; j <= t.rank(); ++j) imgs.push_back(s.apply(t.image(j)));
  return EndoTable(s.rank(), std::move(imgs));
}

bool verify_inverse_pair(const EndoTable& t, const EndoTable& t_inv) {
  if (t.rank() != t_inv.rank()) return false;
  return compose(t, t_inv).is_identity() && compose(t_inv, t).is_identity();
}

bool is_IA(const EndoTable& t) {
  for (int j = 1; j <= t.rank(); ++j) {
    AbVector v = exponent_sums(t.image(j));
    for (int i = 1; i <= t.rank(); ++i)
      if (v[static_cast<size_t>(i - 1)] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

std::string to_string(const EndoTable& t) {
  std::string out;
  for (int j = 1; j <= t.rank(); ++j) {
    out += 'x';
    out += std::to_string(j);
    out += " -> ";
    out += to_string(t.image(j));
    out += '\n';
  }
  return out;
}

EndoTable parse_endo_table(const std::string& text, int rank) {
  std::vector<Word> imgs(static_cast<size_t>(rank), Word::identity(rank));
  std::vector<bool> seen(static_cast<size_t>(rank), false);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ParseError("table line needs 'x<j> -> <word>'", 1);
    Word lhs = parse_word(line.substr(0, arrow), rank);
    if (lhs.syllables().size() != 1 || lhs.syllables()[0].exp != 1)
      throw ParseError("table line left side must be a single generator", 1);
    int g = lhs.syllables()[0].gen;
    if (seen[static_cast<size_t>(g - 1)])
      throw ParseError("duplicate table line for x" + std::to_string(g), 1);
    seen[static_cast<size_t>(g - 1)] = true;
    imgs[static_cast<size_t>(g - 1)] = parse_word(line.substr(arrow + 2), rank);
  }
  for (int j = 1; j <= rank; ++j)
    if (!seen[static_cast<size_t>(j - 1)])
      throw ParseError("missing table line for x" + std::to_string(j), 1);
  return EndoTable(rank, std::move(imgs));
}

}  // namespace magord

#include "magord/word.hpp"

#include <stdexcept>

namespace magord {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be positive");
}

void push_reduced(std::vector<Syllable>& out, int gen, long long exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back({gen, exp});
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Syllable> raw) : rank_(rank) {
  check_rank(rank);
  for (const auto& s : raw) {
    if (s.gen < 1 || s.gen > rank)
      throw std::out_of_range("generator index out of range: x" +
                              std::to_string(s.gen) + " in rank " +
                              std::to_string(rank));
    push_reduced(syls_, s.gen, s.exp);
  }
}

Word::Word(int rank, std::initializer_list<Syllable> raw)
    : Word(rank, std::span<const Syllable>(raw.begin(), raw.size())) {}

Word Word::generator(int rank, int gen, long long exp) {
  Syllable s{gen, exp};
  return Word(rank, std::span<const Syllable>(&s, 1));
}

long long Word::length() const {
  long long n = 0;
  for (const auto& s : syls_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

Word free_reduce(int rank, std::span<const Syllable> raw) {
  return Word(rank, raw);
}

Word multiply(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("word rank mismatch: " +
                                std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
  std::vector<Syllable> out = a.syllables();
  for (const auto& s : b.syllables()) push_reduced(out, s.gen, s.exp);
  return Word(a.rank(), out);
}

Word invert(const Word& a) {
  std::vector<Syllable> out;
  out.reserve(a.syllables().size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return Word(a.rank(), out);
}

Word power(const Word& a, long long e) {
  if (e == 0) return Word::identity(a.rank());
  Word base = e > 0 ? a : invert(a);
  long long n = e > 0 ? e : -e;
  Word acc = base;
  for (long long i = 1; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

AbVector exponent_sums(const Word& w) {
  AbVector v(static_cast<size_t>(w.rank()), 0);
  for (const auto& s : w.syllables()) v[static_cast<size_t>(s.gen - 1)] += s.exp;
  return v;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

}  // namespace magord

#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace magord {

/// One run of a reduced word: `exp` copies of generator `gen` (exp != 0).
struct Syllable {
  int gen = 1;        // 1-based generator index
  long long exp = 0;  // nonzero in a reduced word

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word in the free group of a fixed rank.
///
/// Invariants: adjacent syllables carry distinct generators, all exponents
/// are nonzero, and the empty syllable list is the identity.  Every
/// constructor free-reduces its input, so a Word is reduced by construction.
/// Values are immutable; all operations are pure.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::span<const Syllable> raw);
  Word(int rank, std::initializer_list<Syllable> raw);

  static Word identity(int rank) { return Word(rank); }
  static Word generator(int rank, int gen, long long exp = 1);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }
  /// Letter count (sum of |exp|).
  long long length() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int rank_;
  std::vector<Syllable> syls_;
};

/// Free reduction of a raw syllable sequence.  Throws std::out_of_range if
/// any generator index falls outside 1..rank.
Word free_reduce(int rank, std::span<const Syllable> raw);

/// Reduced product a*b.  Throws std::invalid_argument on rank mismatch.
Word multiply(const Word& a, const Word& b);

Word invert(const Word& a);
Word power(const Word& a, long long e);

/// Exponent sum of each generator: the abelianization image.
using AbVector = std::vector<long long>;
AbVector exponent_sums(const Word& w);

/// Text form: `x1 x2^-1 x3^2`, identity prints as `1`.
std::string to_string(const Word& w);

}  // namespace magord

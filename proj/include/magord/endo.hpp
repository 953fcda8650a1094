#pragma once

#include <string>
#include <vector>

#include "magord/word.hpp"

namespace magord {

/// Endomorphism of a free group given by the image of each generator.
/// Invertibility is never assumed; towers supply inverses explicitly and
/// verify_inverse_pair certifies them.
class EndoTable {
 public:
  EndoTable(int rank, std::vector<Word> images);

  static EndoTable identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int gen) const;
  const std::vector<Word>& images() const { return images_; }
  bool is_identity() const;

  /// Substitution: each letter x_j^e maps to image(j)^e; result reduced.
  Word apply(const Word& w) const;

  friend bool operator==(const EndoTable&, const EndoTable&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

/// compose(s, t).apply(w) == s.apply(t.apply(w)).
EndoTable compose(const EndoTable& s, const EndoTable& t);

/// True iff both compositions fix every generator.
bool verify_inverse_pair(const EndoTable& t, const EndoTable& t_inv);

/// True iff the induced map on the abelianization is the identity.
bool is_IA(const EndoTable& t);

/// One line per generator: `x1 -> x2^-1 x1 x2`.
std::string to_string(const EndoTable& t);
EndoTable parse_endo_table(const std::string& text, int rank);

}  // namespace magord

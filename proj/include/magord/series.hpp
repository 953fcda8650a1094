#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "magord/word.hpp"

namespace magord {

using Int = boost::multiprecision::cpp_int;

/// Product of non-commuting variables X_i, stored as the index sequence.
/// The empty sequence is the constant monomial 1.  Ordered by degree, then
/// lexicographically by variable index (X1 before X2, X1*X2 before X2*X1).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> vars) : vars_(std::move(vars)) {}

  static Monomial one() { return Monomial(); }
  static Monomial var(int i) { return Monomial({i}); }

  int degree() const { return static_cast<int>(vars_.size()); }
  const std::vector<int>& vars() const { return vars_; }
  Monomial concat(const Monomial& o) const;
  bool square_free() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.vars_.size() != b.vars_.size()) return a.vars_.size() < b.vars_.size();
    return a.vars_ < b.vars_;
  }

  /// `X1*X2`, repeated variables compressed: `X1^2`; constant prints `1`.
  std::string str() const;

 private:
  std::vector<int> vars_;
};

enum class Ordering { Less, Equal, Greater };

Ordering flip(Ordering o);
const char* to_string(Ordering o);

/// Outcome of comparing two truncated series: either they are decided at
/// some degree/monomial, or they agree on every term up to `degree`.
struct SeriesVerdict {
  Ordering ord = Ordering::Equal;  // Equal means "agree up to degree"
  int degree = 0;
  Monomial monomial;  // deciding monomial when ord != Equal

  bool decided() const { return ord != Ordering::Equal; }
};

/// Integer power series in non-commuting variables, truncated at a fixed
/// degree.  Zero coefficients are never stored; every stored monomial has
/// degree <= truncation.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int truncation);

  static MagnusSeries one(int rank, int truncation);

  int rank() const { return rank_; }
  int truncation() const { return trunc_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coeff(const Monomial& m) const;
  bool is_one() const;

  /// Adds `c` to the coefficient of `m`; drops monomials beyond truncation.
  void add_term(const Monomial& m, const Int& c);

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int rank_;
  int trunc_;
  std::map<Monomial, Int> terms_;
};

/// Result truncation is min of the operands'.  Rank mismatch throws.
MagnusSeries series_add(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries series_mul(const MagnusSeries& a, const MagnusSeries& b);

/// Inverse of 1+W as 1 - W + W^2 - ...; requires constant coefficient 1.
MagnusSeries geometric_inverse(const MagnusSeries& s);

/// Magnus expansion x_i -> 1+X_i, x_i^-1 -> 1-X_i+X_i^2-..., truncated.
MagnusSeries magnus_expand(const Word& w, int degree);

/// Scans degrees 0..min truncation, monomials of equal degree in lex order;
/// decides at the first differing coefficient.
SeriesVerdict series_compare(const MagnusSeries& a, const MagnusSeries& b);

/// Optional transparent memo of expansions, keyed by (word, degree).
/// Filling is idempotent; safe for concurrent use.
class ExpandCache {
 public:
  const MagnusSeries& get(const Word& w, int degree);

 private:
  std::map<std::pair<Word, int>, MagnusSeries> map_;
  std::mutex mutex_;
};

struct CompareOptions {
  int max_degree = 64;           // deepening ceiling; exceeding it throws
  ExpandCache* cache = nullptr;  // optional, off by default
};

/// Verdict for a pair of group elements, with the deciding monomial kept
/// for reporting.  degree/monomial are meaningful only when ord != Equal.
struct WordVerdict {
  Ordering ord = Ordering::Equal;
  int degree = 0;
  Monomial monomial;
};

/// The Magnus bi-ordering of the free group.  Equality is decided by free
/// reduction; otherwise truncation deepens (2, 4, 8, ...) until the
/// expansions separate.  Throws std::runtime_error past max_degree.
WordVerdict magnus_compare(const Word& u, const Word& v,
                           const CompareOptions& opts = {});

enum class Sign { Negative, Zero, Positive };

/// Position of w against the identity in the Magnus order.
Sign sign(const Word& w, const CompareOptions& opts = {});

/// Canonical (degree, lex) printing shared by series and polynomials,
/// e.g. `1 + X1*X2 - X2*X1`, `1 + 2 X1`.  Zero prints `0`.
std::string format_terms(const std::map<Monomial, Int>& terms);
std::string to_string(const MagnusSeries& s);

}  // namespace magord

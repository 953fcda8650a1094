#pragma once

#include <map>
#include <string>

#include "magord/series.hpp"
#include "magord/word.hpp"

namespace magord {

/// Monomial count is worst-case factorial in the rank; larger reduced ranks
/// are rejected outright rather than silently blowing up.
inline constexpr int kReducedRankLimit = 10;

/// Exact integer polynomial in non-commuting variables where any monomial
/// with a repeated variable is zero.  Finite (degree <= rank), never
/// truncated; no zero coefficients stored.
class SquareFreePoly {
 public:
  explicit SquareFreePoly(int rank, int rank_limit = kReducedRankLimit);

  static SquareFreePoly one(int rank, int rank_limit = kReducedRankLimit);

  int rank() const { return rank_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coeff(const Monomial& m) const;
  bool is_one() const;

  /// Adds c to the coefficient of m; monomials with repeats vanish.
  void add_term(const Monomial& m, const Int& c);

  friend bool operator==(const SquareFreePoly&, const SquareFreePoly&) = default;

 private:
  int rank_;
  std::map<Monomial, Int> terms_;
};

SquareFreePoly sf_add(const SquareFreePoly& a, const SquareFreePoly& b);
SquareFreePoly sf_mul(const SquareFreePoly& a, const SquareFreePoly& b);

/// Reduced Magnus expansion x_i -> 1+X_i, x_i^-1 -> 1-X_i; exact.
SquareFreePoly reduced_expand(const Word& w, int rank_limit = kReducedRankLimit);

/// Word problem for the reduced free group: equality of exact expansions.
bool reduced_equal(const Word& u, const Word& v,
                   int rank_limit = kReducedRankLimit);

/// The reduced Magnus bi-ordering; decided at the first (degree, lex)
/// monomial with differing coefficients, no deepening needed.
WordVerdict reduced_compare(const Word& u, const Word& v,
                            int rank_limit = kReducedRankLimit);

std::string to_string(const SquareFreePoly& p);

}  // namespace magord

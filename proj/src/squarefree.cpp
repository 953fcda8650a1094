#include "magord/squarefree.hpp"

#include <stdexcept>

namespace magord {

namespace {

void check_rank(int rank, int limit) {
  if (rank < 1) throw std::invalid_argument("polynomial rank must be positive");
  if (rank > limit)
    throw std::invalid_argument(
        "reduced rank " + std::to_string(rank) + " exceeds the guard (" +
        std::to_string(limit) + "); square-free monomial count is factorial");
}

}  // namespace

SquareFreePoly::SquareFreePoly(int rank, int rank_limit) : rank_(rank) {
  check_rank(rank, rank_limit);
}

SquareFreePoly SquareFreePoly::one(int rank, int rank_limit) {
  SquareFreePoly p(rank, rank_limit);
  p.terms_[Monomial::one()] = 1;
  return p;
}

Int SquareFreePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

bool SquareFreePoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial::one() &&
         terms_.begin()->second == 1;
}

void SquareFreePoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0 || !m.square_free()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SquareFreePoly sf_add(const SquareFreePoly& a, const SquareFreePoly& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("polynomial rank mismatch");
  SquareFreePoly out(a.rank());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

SquareFreePoly sf_mul(const SquareFreePoly& a, const SquareFreePoly& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("polynomial rank mismatch");
  SquareFreePoly out(a.rank());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(ma.concat(mb), ca * cb);  // repeats vanish in add_term
  return out;
}

SquareFreePoly reduced_expand(const Word& w, int rank_limit) {
  SquareFreePoly acc = SquareFreePoly::one(w.rank(), rank_limit);
  for (const auto& s : w.syllables()) {
    // x_i^e -> 1 + e X_i: higher powers of X_i have repeats
    SquareFreePoly f(w.rank(), rank_limit);
    f.add_term(Monomial::one(), 1);
    f.add_term(Monomial::var(s.gen), s.exp);
    acc = sf_mul(acc, f);
  }
  return acc;
}

bool reduced_equal(const Word& u, const Word& v, int rank_limit) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("reduced_equal: rank mismatch");
  return reduced_expand(u, rank_limit) == reduced_expand(v, rank_limit);
}

WordVerdict reduced_compare(const Word& u, const Word& v, int rank_limit) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("reduced_compare: rank mismatch");
  SquareFreePoly pu = reduced_expand(u, rank_limit);
  SquareFreePoly pv = reduced_expand(v, rank_limit);
  auto ia = pu.terms().begin(), ea = pu.terms().end();
  auto ib = pv.terms().begin(), eb = pv.terms().end();
  while (ia != ea || ib != eb) {
    bool take_a = ib == eb || (ia != ea && ia->first < ib->first);
    bool take_b = ia == ea || (ib != eb && ib->first < ia->first);
    const Monomial& m = take_b ? ib->first : ia->first;
    Int ca = take_b ? Int(0) : ia->second;
    Int cb = take_a ? Int(0) : ib->second;
    if (ca != cb)
      return {ca < cb ? Ordering::Less : Ordering::Greater, m.degree(), m};
    if (!take_b) ++ia;
    if (!take_a) ++ib;
  }
  return {Ordering::Equal, 0, {}};
}

std::string to_string(const SquareFreePoly& p) { return format_terms(p.terms()); }

}  // namespace magord

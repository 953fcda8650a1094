#include "magord/series.hpp"

#include <stdexcept>

namespace magord {

Monomial Monomial::concat(const Monomial& o) const {
  std::vector<int> v = vars_;
  v.insert(v.end(), o.vars_.begin(), o.vars_.end());
  return Monomial(std::move(v));
}

bool Monomial::square_free() const {
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) return false;
  return true;
}

std::string Monomial::str() const {
  if (vars_.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < vars_.size()) {
    size_t run = i;
    while (run < vars_.size() && vars_[run] == vars_[i]) ++run;
    if (!out.empty()) out += '*';
    out += 'X';
    out += std::to_string(vars_[i]);
    if (run - i > 1) {
      out += '^';
      out += std::to_string(run - i);
    }
    i = run;
  }
  return out;
}

Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    default: return Ordering::Equal;
  }
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "LESS";
    case Ordering::Greater: return "GREATER";
    default: return "EQUAL";
  }
}

MagnusSeries::MagnusSeries(int rank, int truncation)
    : rank_(rank), trunc_(truncation) {
  if (rank < 1) throw std::invalid_argument("series rank must be positive");
  if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
}

MagnusSeries MagnusSeries::one(int rank, int truncation) {
  MagnusSeries s(rank, truncation);
  s.terms_[Monomial::one()] = 1;
  return s;
}

Int MagnusSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

bool MagnusSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial::one() &&
         terms_.begin()->second == 1;
}

void MagnusSeries::add_term(const Monomial& m, const Int& c) {
  if (m.degree() > trunc_ || c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void check_ranks(int a, int b) {
  if (a != b)
    throw std::invalid_argument("series rank mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
}

}  // namespace

MagnusSeries series_add(const MagnusSeries& a, const MagnusSeries& b) {
  check_ranks(a.rank(), b.rank());
  MagnusSeries out(a.rank(), std::min(a.truncation(), b.truncation()));
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

MagnusSeries series_mul(const MagnusSeries& a, const MagnusSeries& b) {
  check_ranks(a.rank(), b.rank());
  int trunc = std::min(a.truncation(), b.truncation());
  MagnusSeries out(a.rank(), trunc);
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > trunc) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > trunc) continue;
      out.add_term(ma.concat(mb), ca * cb);
    }
  }
  return out;
}

MagnusSeries geometric_inverse(const MagnusSeries& s) {
  if (s.coeff(Monomial::one()) != 1)
    throw std::invalid_argument("geometric_inverse needs constant coefficient 1");
  int trunc = s.truncation();
  // W = s - 1
  MagnusSeries w(s.rank(), trunc);
  for (const auto& [m, c] : s.terms())
    if (m.degree() > 0) w.add_term(m, c);

  MagnusSeries out = MagnusSeries::one(s.rank(), trunc);
  MagnusSeries pw = MagnusSeries::one(s.rank(), trunc);
  for (int k = 1; k <= trunc; ++k) {
    pw = series_mul(pw, w);
    if (pw.terms().empty()) break;
    int sgn = (k % 2 == 0) ? 1 : -1;
    for (const auto& [m, c] : pw.terms()) out.add_term(m, sgn * c);
  }
  return out;
}

namespace {

/// (1+X_i)^e truncated; e may be negative (alternating geometric powers).
MagnusSeries syllable_series(int rank, int gen, long long e, int trunc) {
  MagnusSeries s(rank, trunc);
  // binomial C(e, k) = e(e-1)...(e-k+1)/k!, exact at every step
  Int coeff = 1;
  std::vector<int> vars;
  for (int k = 0; k <= trunc; ++k) {
    if (k > 0) {
      coeff *= Int(e) - (k - 1);
      coeff /= k;
      if (coeff == 0) break;
      vars.push_back(gen);
    }
    s.add_term(Monomial(vars), coeff);
  }
  return s;
}

}  // namespace

MagnusSeries magnus_expand(const Word& w, int degree) {
  MagnusSeries acc = MagnusSeries::one(w.rank(), degree);
  for (const auto& s : w.syllables())
    acc = series_mul(acc, syllable_series(w.rank(), s.gen, s.exp, degree));
  return acc;
}

SeriesVerdict series_compare(const MagnusSeries& a, const MagnusSeries& b) {
  check_ranks(a.rank(), b.rank());
  int bound = std::min(a.truncation(), b.truncation());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    bool take_a = ib == eb || (ia != ea && ia->first < ib->first);
    bool take_b = ia == ea || (ib != eb && ib->first < ia->first);
    const Monomial& m = take_b ? ib->first : ia->first;
    if (m.degree() > bound) break;
    Int ca = take_b ? Int(0) : ia->second;
    Int cb = take_a ? Int(0) : ib->second;
    if (ca != cb)
      return {ca < cb ? Ordering::Less : Ordering::Greater, m.degree(), m};
    if (!take_b) ++ia;
    if (!take_a) ++ib;
  }
  return {Ordering::Equal, bound, Monomial::one()};
}

const MagnusSeries& ExpandCache::get(const Word& w, int degree) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(w, degree);
  auto it = map_.find(key);
  if (it == map_.end())
    it = map_.emplace(std::move(key), magnus_expand(w, degree)).first;
  return it->second;
}

WordVerdict magnus_compare(const Word& u, const Word& v,
                           const CompareOptions& opts) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("magnus_compare: rank mismatch");
  if (multiply(invert(u), v).is_identity()) return {Ordering::Equal, 0, {}};

  for (int d = 2;; d *= 2) {
    if (d > opts.max_degree) d = opts.max_degree;
    SeriesVerdict sv =
        opts.cache
            ? series_compare(opts.cache->get(u, d), opts.cache->get(v, d))
            : series_compare(magnus_expand(u, d), magnus_expand(v, d));
    if (sv.decided()) return {sv.ord, sv.degree, sv.monomial};
    if (d >= opts.max_degree)
      throw std::runtime_error(
          "magnus_compare: no difference up to degree ceiling " +
          std::to_string(opts.max_degree) +
          " for freely distinct words; inputs are likely inconsistent");
  }
}

Sign sign(const Word& w, const CompareOptions& opts) {
  WordVerdict v = magnus_compare(Word::identity(w.rank()), w, opts);
  switch (v.ord) {
    case Ordering::Less: return Sign::Positive;
    case Ordering::Greater: return Sign::Negative;
    default: return Sign::Zero;
  }
}

std::string format_terms(const std::map<Monomial, Int>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.degree() == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += ' ';
      }
      out += m.str();
    }
  }
  return out;
}

std::string to_string(const MagnusSeries& s) { return format_terms(s.terms()); }

}  // namespace magord

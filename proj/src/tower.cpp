#include "magord/tower.hpp"

#include <stdexcept>

namespace magord {

TowerSpec::TowerSpec(std::vector<Factor> factors,
                     std::map<ActionKey, ActionPair> actions)
    : factors_(std::move(factors)), actions_(std::move(actions)) {
  if (factors_.empty())
    throw std::invalid_argument("a tower needs at least one factor");
  for (const auto& f : factors_)
    if (f.rank < 1) throw std::invalid_argument("factor rank must be positive");
}

const Factor& TowerSpec::factor(int i) const {
  if (i < 1 || i > factor_count())
    throw std::out_of_range("factor index out of range");
  return factors_[static_cast<size_t>(i - 1)];
}

const EndoTable* TowerSpec::action(int source_factor, int source_gen,
                                   int target_factor, bool inverse) const {
  auto it = actions_.find({source_factor, source_gen, target_factor});
  if (it == actions_.end()) return nullptr;
  return inverse ? &it->second.inverse : &it->second.table;
}

TowerSpec TowerSpec::retract() const {
  if (factor_count() < 2)
    throw std::invalid_argument("cannot retract a single-factor tower");
  std::vector<Factor> fs(factors_.begin(), factors_.end() - 1);
  std::map<ActionKey, ActionPair> as;
  for (const auto& [k, v] : actions_)
    if (k.target_factor < factor_count()) as.emplace(k, v);
  return TowerSpec(std::move(fs), std::move(as));
}

std::string SpecReport::str() const {
  if (ok()) return "valid\n";
  std::string out;
  for (const auto& v : violations) {
    out += v.what;
    out += " [source factor ";
    out += std::to_string(v.where.source_factor);
    out += ", generator ";
    out += std::to_string(v.where.source_gen);
    out += " -> target factor ";
    out += std::to_string(v.where.target_factor);
    out += "]\n";
  }
  return out;
}

SpecReport validate_spec(const TowerSpec& s) {
  SpecReport report;
  auto fail = [&](const ActionKey& k, std::string what) {
    report.violations.push_back({std::move(what), k});
  };
  for (const auto& [k, pair] : s.actions()) {
    if (k.source_factor < 1 || k.source_factor > s.factor_count() ||
        k.target_factor < 1 || k.target_factor > s.factor_count()) {
      fail(k, "factor index out of range");
      continue;
    }
    if (k.source_factor >= k.target_factor) {
      fail(k, "actions must go from a lower factor to a higher one");
      continue;
    }
    if (k.source_gen < 1 || k.source_gen > s.factor(k.source_factor).rank) {
      fail(k, "source generator out of range");
      continue;
    }
    int target_rank = s.factor(k.target_factor).rank;
    if (pair.table.rank() != target_rank || pair.inverse.rank() != target_rank) {
      fail(k, "table rank does not match the target factor");
      continue;
    }
    if (!is_IA(pair.table))
      fail(k, "non-IA action table (acts nontrivially on H1 of the target)");
    if (!is_IA(pair.inverse))
      fail(k, "non-IA inverse table (acts nontrivially on H1 of the target)");
    if (!verify_inverse_pair(pair.table, pair.inverse))
      fail(k, "table and inverse_table are not mutually inverse");
  }
  return report;
}

TowerElement TowerElement::identity(const TowerSpec& s) {
  std::vector<Word> comps;
  comps.reserve(static_cast<size_t>(s.factor_count()));
  for (int i = 1; i <= s.factor_count(); ++i)
    comps.push_back(Word::identity(s.factor(i).rank));
  return TowerElement(std::move(comps));
}

TowerElement::TowerElement(std::vector<Word> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("empty tower element");
}

const Word& TowerElement::component(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("component index out of range");
  return comps_[static_cast<size_t>(i - 1)];
}

bool TowerElement::is_identity() const {
  for (const auto& w : comps_)
    if (!w.is_identity()) return false;
  return true;
}

std::vector<TowerGen> TowerElement::letters() const {
  std::vector<TowerGen> out;
  for (int i = size(); i >= 1; --i)
    for (const auto& syl : component(i).syllables())
      out.push_back({i, syl.gen, syl.exp});
  return out;
}

namespace {

void check_element(const TowerElement& g, const TowerSpec& s, const char* op) {
  if (g.size() != s.factor_count())
    throw std::invalid_argument(std::string(op) +
                                ": element does not match the tower spec");
  for (int i = 1; i <= g.size(); ++i)
    if (g.component(i).rank() != s.factor(i).rank)
      throw std::invalid_argument(std::string(op) + ": component " +
                                  std::to_string(i) + " has wrong rank");
}

/// y |-> (c_{f-1} ... c_1) y (c_{f-1} ... c_1)^{-1}, i.e. the action of the
/// inverse prefix.  The action map is an anti-homomorphism, so the letters
/// of c_1^{-1} c_2^{-1} ... c_{f-1}^{-1} are applied left to right.
Word cross_prefix(Word y, int f, const std::vector<Word>& comps,
                  const TowerSpec& s) {
  for (int i = 1; i < f; ++i) {
    const Word& ci = comps[static_cast<size_t>(i - 1)];
    for (auto it = ci.syllables().rbegin(); it != ci.syllables().rend(); ++it) {
      long long e = -it->exp;  // letter of c_i^{-1}
      const EndoTable* t = s.action(i, it->gen, f, /*inverse=*/e < 0);
      if (t == nullptr) continue;  // identity action
      long long reps = e < 0 ? -e : e;
      for (long long k = 0; k < reps; ++k) y = t->apply(y);
    }
  }
  return y;
}

void push_letter(std::vector<Word>& comps, const TowerGen& letter,
                 const TowerSpec& s) {
  if (letter.factor < 1 || letter.factor > s.factor_count())
    throw std::out_of_range("unknown tower factor g" +
                            std::to_string(letter.factor));
  const Factor& f = s.factor(letter.factor);
  if (letter.gen < 1 || letter.gen > f.rank)
    throw std::out_of_range("unknown generator g" +
                            std::to_string(letter.factor) + "." +
                            std::to_string(letter.gen));
  Word y = Word::generator(f.rank, letter.gen, letter.exp);
  y = cross_prefix(std::move(y), letter.factor, comps, s);
  Word& slot = comps[static_cast<size_t>(letter.factor - 1)];
  slot = multiply(slot, y);
}

}  // namespace

TowerElement normalize(std::span<const TowerGen> raw, const TowerSpec& s) {
  std::vector<Word> comps;
  comps.reserve(static_cast<size_t>(s.factor_count()));
  for (int i = 1; i <= s.factor_count(); ++i)
    comps.push_back(Word::identity(s.factor(i).rank));
  for (const auto& letter : raw) push_letter(comps, letter, s);
  return TowerElement(std::move(comps));
}

TowerElement tower_multiply(const TowerElement& g, const TowerElement& h,
                            const TowerSpec& s) {
  check_element(g, s, "tower_multiply");
  check_element(h, s, "tower_multiply");
  std::vector<Word> comps = g.components();
  for (const auto& letter : h.letters()) push_letter(comps, letter, s);
  return TowerElement(std::move(comps));
}

TowerElement tower_invert(const TowerElement& g, const TowerSpec& s) {
  check_element(g, s, "tower_invert");
  std::vector<TowerGen> letters = g.letters();
  std::vector<TowerGen> inv;
  inv.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    inv.push_back({it->factor, it->gen, -it->exp});
  return normalize(inv, s);
}

bool tower_equal(const TowerElement& g, const TowerElement& h,
                 const TowerSpec& s) {
  check_element(g, s, "tower_equal");
  check_element(h, s, "tower_equal");
  for (int i = 1; i <= s.factor_count(); ++i) {
    if (s.factor(i).kind == FactorKind::Free) {
      if (g.component(i) != h.component(i)) return false;
    } else {
      if (!reduced_equal(g.component(i), h.component(i))) return false;
    }
  }
  return true;
}

TowerVerdict tower_compare(const TowerElement& g, const TowerElement& h,
                           const TowerSpec& s, const CompareOptions& opts) {
  check_element(g, s, "tower_compare");
  check_element(h, s, "tower_compare");
  for (int i = 1; i <= s.factor_count(); ++i) {
    WordVerdict v = s.factor(i).kind == FactorKind::Free
                        ? magnus_compare(g.component(i), h.component(i), opts)
                        : reduced_compare(g.component(i), h.component(i));
    if (v.ord != Ordering::Equal) return {v.ord, i, v};
  }
  return {Ordering::Equal, 0, {}};
}

TowerAb tower_ab(const TowerElement& g, const TowerSpec& s) {
  check_element(g, s, "tower_ab");
  TowerAb out;
  out.reserve(static_cast<size_t>(g.size()));
  for (int i = 1; i <= g.size(); ++i) out.push_back(exponent_sums(g.component(i)));
  return out;
}

Ordering tower_ab_compare(const TowerAb& a, const TowerAb& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("tower_ab_compare: block count mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size())
      throw std::invalid_argument("tower_ab_compare: block size mismatch");
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] < b[i][j]) return Ordering::Less;
      if (a[i][j] > b[i][j]) return Ordering::Greater;
    }
  }
  return Ordering::Equal;
}

TowerElement retraction(const TowerElement& g, const TowerSpec& s) {
  check_element(g, s, "retraction");
  if (g.size() < 2)
    throw std::invalid_argument("retraction: no smaller tower below one factor");
  std::vector<Word> comps(g.components().begin(), g.components().end() - 1);
  return TowerElement(std::move(comps));
}

std::string to_string(const TowerElement& g) {
  std::string out;
  for (const auto& letter : g.letters()) {
    if (!out.empty()) out += ' ';
    out += 'g';
    out += std::to_string(letter.factor);
    out += '.';
    out += std::to_string(letter.gen);
    if (letter.exp != 1) {
      out += '^';
      out += std::to_string(letter.exp);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace magord

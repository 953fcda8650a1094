#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magord/endo.hpp"
#include "magord/parse.hpp"
#include "magord/series.hpp"
#include "magord/squarefree.hpp"
#include "magord/word.hpp"

namespace magord {

enum class FactorKind { Free, Reduced };

struct Factor {
  int rank = 1;
  FactorKind kind = FactorKind::Free;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct ActionKey {
  int source_factor = 1;
  int source_gen = 1;
  int target_factor = 2;

  friend bool operator==(const ActionKey&, const ActionKey&) = default;
  friend auto operator<=>(const ActionKey&, const ActionKey&) = default;
};

struct ActionPair {
  EndoTable table;
  EndoTable inverse;

  friend bool operator==(const ActionPair&, const ActionPair&) = default;
};

/// Iterated semidirect product data: ordered factors (factor 1 is the
/// quotient end) and, per lower-factor generator, its conjugation action on
/// each higher factor.  Omitted actions are identity tables.
class TowerSpec {
 public:
  TowerSpec(std::vector<Factor> factors, std::map<ActionKey, ActionPair> actions);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const;  // 1-based
  const std::vector<Factor>& factors() const { return factors_; }
  const std::map<ActionKey, ActionPair>& actions() const { return actions_; }

  /// nullptr means the identity action.
  const EndoTable* action(int source_factor, int source_gen, int target_factor,
                          bool inverse) const;

  /// Spec over factors 1..l-1 (drops the innermost factor).
  TowerSpec retract() const;

  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;

 private:
  std::vector<Factor> factors_;
  std::map<ActionKey, ActionPair> actions_;
};

struct SpecViolation {
  std::string what;
  ActionKey where;
};

struct SpecReport {
  std::vector<SpecViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Checks every invariant: table/inverse ranks match the target factor,
/// every table is IA (the almost-direct condition), every pair is a genuine
/// inverse pair, and indices are structurally sound.  Violations are the
/// report; nothing throws.
SpecReport validate_spec(const TowerSpec& s);

/// Element in normal form: component i lies in factor i, and the group
/// element is w_l * w_{l-1} * ... * w_1 (factor-1 word rightmost).
class TowerElement {
 public:
  static TowerElement identity(const TowerSpec& s);
  explicit TowerElement(std::vector<Word> components);

  int size() const { return static_cast<int>(comps_.size()); }
  const Word& component(int i) const;  // 1-based
  const std::vector<Word>& components() const { return comps_; }
  bool is_identity() const;

  /// Letters in group order: factor l first, factor 1 last.
  std::vector<TowerGen> letters() const;

  friend bool operator==(const TowerElement&, const TowerElement&) = default;

 private:
  std::vector<Word> comps_;
};

/// Rewrites a mixed generator word into the unique normal form, moving
/// lower-factor letters rightward through the action tables.
TowerElement normalize(std::span<const TowerGen> raw, const TowerSpec& s);

TowerElement tower_multiply(const TowerElement& g, const TowerElement& h,
                            const TowerSpec& s);
TowerElement tower_invert(const TowerElement& g, const TowerSpec& s);

/// Componentwise equality under each factor's own semantics (free reduction
/// for Free factors, reduced expansion for Reduced ones).
bool tower_equal(const TowerElement& g, const TowerElement& h,
                 const TowerSpec& s);

struct TowerVerdict {
  Ordering ord = Ordering::Equal;
  int component = 0;  // deciding component when ord != Equal
  WordVerdict inner;
};

/// Eastern lexicographic order: component 1 decides first, each factor
/// compared under its own (reduced) Magnus order.
TowerVerdict tower_compare(const TowerElement& g, const TowerElement& h,
                           const TowerSpec& s, const CompareOptions& opts = {});

using TowerAb = std::vector<AbVector>;

/// Per-component exponent sums.
TowerAb tower_ab(const TowerElement& g, const TowerSpec& s);

/// Eastern lexicographic comparison of abelianization images: block 1 first,
/// entries within a block most-significant first.
Ordering tower_ab_compare(const TowerAb& a, const TowerAb& b);

/// Drops component l; throws std::invalid_argument when l == 1.
TowerElement retraction(const TowerElement& g, const TowerSpec& s);

/// Normal form as a tower word, e.g. `g2.1 g2.2^-1 g1.1`; identity is `1`.
std::string to_string(const TowerElement& g);

}  // namespace magord

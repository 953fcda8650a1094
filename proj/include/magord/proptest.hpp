#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magord/endo.hpp"
#include "magord/tower.hpp"

namespace magord {

/// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

/// Uniformly random freely reduced word of length <= max_len.
Word random_reduced_word(Rng& rng, int rank, int max_len);

/// Random element with one random word per component.
TowerElement random_element(Rng& rng, const TowerSpec& s, int max_len);

/// Product of at most max_gens random epsilon-style IA generators (single
/// conjugations x_a -> x_b^-1 x_a x_b and commutator insertions
/// x_a -> x_a [x_b, x_c]), possibly inverted.  Always passes is_IA.
EndoTable random_ia_table(Rng& rng, int rank, int max_gens);

/// All freely reduced words of length <= max_len, identity first, ordered
/// by (length, lex).
std::vector<Word> all_reduced_words(int rank, int max_len);

/// Where a property suite runs: a tower spec (plain free and reduced groups
/// are single-factor towers) plus the CLI flags that rebuild the context,
/// used to print re-checkable counterexamples.
struct PropContext {
  TowerSpec spec;
  std::string label;
  std::string recheck_flags;

  static PropContext free_group(int rank);
  static PropContext reduced_group(int rank);
  static PropContext tower(TowerSpec s, std::string label,
                           std::string recheck_flags);

  bool single_free() const;
  bool single_reduced() const;
};

struct PropOptions {
  uint64_t seed = 0;
  int iterations = 1000;
  int max_len = 4;
  CompareOptions compare{};
};

struct PropFailure {
  std::string description;
  std::string recheck;  // a single `compare` invocation exhibiting it
};

struct PropResult {
  std::string suite;
  std::string context;
  int cases = 0;
  std::vector<PropFailure> failures;

  bool pass() const { return failures.empty(); }
};

/// Suites: order-axioms | bi-invariance | ia-invariance | positive-cone |
/// gen-torsion | ab-respecting | diagram.  Unknown names throw.
PropResult run_suite(const std::string& suite, const PropContext& ctx,
                     const PropOptions& opts);

std::vector<std::string> suite_names();

}  // namespace magord

#include "magord/presets.hpp"

#include <cstdlib>
#include <stdexcept>

#ifndef MAGORD_DEFAULT_DATA_DIR
#define MAGORD_DEFAULT_DATA_DIR ""
#endif

namespace magord {

namespace {

void require_n(int n, const char* name) {
  if (n < 2)
    throw std::invalid_argument(std::string(name) + " needs n >= 2, got " +
                                std::to_string(n));
}

Word conj(const Word& a, const Word& b) {  // a b a^-1
  return multiply(multiply(a, b), invert(a));
}

Word gen(int rank, int g, long long e = 1) { return Word::generator(rank, g, e); }

// ---------------------------------------------------------------------------
// Artin representation of braids on F_n.

EndoTable artin_sigma(int i, int n) {
  std::vector<Word> imgs;
  imgs.reserve(static_cast<size_t>(n));
  for (int t = 1; t <= n; ++t) {
    if (t == i)
      imgs.push_back(conj(gen(n, i), gen(n, i + 1)));
    else if (t == i + 1)
      imgs.push_back(gen(n, i));
    else
      imgs.push_back(gen(n, t));
  }
  return EndoTable(n, std::move(imgs));
}

EndoTable artin_sigma_inv(int i, int n) {
  std::vector<Word> imgs;
  imgs.reserve(static_cast<size_t>(n));
  for (int t = 1; t <= n; ++t) {
    if (t == i)
      imgs.push_back(gen(n, i + 1));
    else if (t == i + 1)
      imgs.push_back(conj(invert(gen(n, i + 1)), gen(n, i)));
    else
      imgs.push_back(gen(n, t));
  }
  return EndoTable(n, std::move(imgs));
}

/// sigma-letter word of the band generator A_{rs}, r < s.
std::vector<std::pair<int, int>> band_letters(int r, int s) {
  std::vector<std::pair<int, int>> out;
  for (int t = s - 1; t > r; --t) out.push_back({t, 1});
  out.push_back({r, 1});
  out.push_back({r, 1});
  for (int t = r + 1; t < s; ++t) out.push_back({t, -1});
  return out;
}

EndoTable braid_auto(const std::vector<std::pair<int, int>>& letters, int n) {
  EndoTable acc = EndoTable::identity(n);
  for (auto [i, e] : letters)
    acc = compose(acc, e > 0 ? artin_sigma(i, n) : artin_sigma_inv(i, n));
  return acc;
}

WitnessEntry band_witness(int r, int s, int n) {
  auto letters = band_letters(r, s);
  std::vector<std::pair<int, int>> rev(letters.rbegin(), letters.rend());
  for (auto& [i, e] : rev) e = -e;
  return {braid_auto(letters, n), braid_auto(rev, n)};
}

// ---------------------------------------------------------------------------
// Pure braid conjugation action on the free factor <x_q = A_{q,k+1}>.
// Source generator A_{rs} with r = p, s = j+1 <= k.

Word braid_action_word(int k, int r, int s, int q, bool inverse) {
  if (q < r || q > s) return gen(k, q);
  if (!inverse) {
    if (q == r) return conj(multiply(gen(k, r), gen(k, s)), gen(k, r));
    if (q == s) return conj(gen(k, r), gen(k, s));
    Word c = multiply(conj(gen(k, r), gen(k, s)), invert(gen(k, s)));
    return conj(c, gen(k, q));
  }
  if (q == r) return conj(invert(gen(k, s)), gen(k, r));
  if (q == s)
    return conj(multiply(invert(gen(k, s)), invert(gen(k, r))), gen(k, s));
  Word c = multiply(multiply(invert(gen(k, s)), invert(gen(k, r))),
                    multiply(gen(k, s), gen(k, r)));
  return conj(c, gen(k, q));
}

EndoTable braid_action_table(int k, int r, int s, bool inverse) {
  std::vector<Word> imgs;
  imgs.reserve(static_cast<size_t>(k));
  for (int q = 1; q <= k; ++q)
    imgs.push_back(braid_action_word(k, r, s, q, inverse));
  return EndoTable(k, std::move(imgs));
}

}  // namespace

PresetBundle pure_braid(int n) {
  require_n(n, "pure_braid");
  std::vector<Factor> factors;
  for (int i = 1; i < n; ++i) factors.push_back({i, FactorKind::Free});

  std::map<ActionKey, ActionPair> actions;
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int p = 1; p <= j; ++p) {
        int r = p, s = j + 1;
        actions.emplace(ActionKey{j, p, k},
                        ActionPair{braid_action_table(k, r, s, false),
                                   braid_action_table(k, r, s, true)});
      }

  Witness w;
  w.ambient_rank = n;
  for (int k = 1; k < n; ++k)
    for (int q = 1; q <= k; ++q)
      w.tables.emplace(std::make_pair(k, q), band_witness(q, k + 1, n));

  return PresetBundle{
      "pure_braid(" + std::to_string(n) + ")",
      "Artin combing of the pure braid group: factor i is free on the band "
      "generators A_(q,i+1); action tables are the standard Artin conjugation "
      "action, certified against the Artin embedding into Aut(F_n)",
      TowerSpec(std::move(factors), std::move(actions)), std::move(w)};
}

PresetBundle upper_mccool(int n) {
  require_n(n, "upper_mccool");
  std::vector<Factor> factors;
  for (int i = 1; i < n; ++i) factors.push_back({i, FactorKind::Free});

  // Factor i is free on eps_(m, m+p), m = n-i, p = 1..i.  Conjugation by the
  // factor-j generator eps_(r, r+p) moves only the target generator with
  // index k-j, conjugating it by the generator with index k-j+p.
  std::map<ActionKey, ActionPair> actions;
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int p = 1; p <= j; ++p) {
        int moved = k - j, by = k - j + p;
        std::vector<Word> imgs, inv_imgs;
        for (int q = 1; q <= k; ++q) {
          if (q == moved) {
            imgs.push_back(conj(gen(k, by), gen(k, q)));
            inv_imgs.push_back(conj(invert(gen(k, by)), gen(k, q)));
          } else {
            imgs.push_back(gen(k, q));
            inv_imgs.push_back(gen(k, q));
          }
        }
        actions.emplace(ActionKey{j, p, k},
                        ActionPair{EndoTable(k, std::move(imgs)),
                                   EndoTable(k, std::move(inv_imgs))});
      }

  Witness w;
  w.ambient_rank = n;
  for (int i = 1; i < n; ++i) {
    int m = n - i;
    for (int p = 1; p <= i; ++p) {
      int s = m + p;
      std::vector<Word> imgs, inv_imgs;
      for (int t = 1; t <= n; ++t) {
        imgs.push_back(t == m ? conj(invert(gen(n, s)), gen(n, m)) : gen(n, t));
        inv_imgs.push_back(t == m ? conj(gen(n, s), gen(n, m)) : gen(n, t));
      }
      w.tables.emplace(std::make_pair(i, p),
                       WitnessEntry{EndoTable(n, std::move(imgs)),
                                    EndoTable(n, std::move(inv_imgs))});
    }
  }

  return PresetBundle{
      "upper_mccool(" + std::to_string(n) + ")",
      "upper triangular McCool group Cb_n^+ decomposed along the free factors "
      "of fixed first index (the CPVW decomposition); tables certified against "
      "the eps_ij basis-conjugating witness automorphisms of F_n",
      TowerSpec(std::move(factors), std::move(actions)), std::move(w)};
}

PresetBundle partial_inner(int n) {
  require_n(n, "partial_inner");
  std::vector<Factor> factors;
  for (int i = 1; i < n; ++i) factors.push_back({i + 1, FactorKind::Free});

  // Factor i has rank i+1, generated by the simultaneous conjugations
  // c_(i+1, p) of x_1..x_{i+1} by x_p.  Conjugation by the factor-j
  // generator c_(j+1, p) conjugates the first j+1 target generators by the
  // target generator with index p.
  std::map<ActionKey, ActionPair> actions;
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int p = 1; p <= j + 1; ++p) {
        int rank = k + 1;
        std::vector<Word> imgs, inv_imgs;
        for (int t = 1; t <= rank; ++t) {
          if (t <= j + 1) {
            imgs.push_back(conj(invert(gen(rank, p)), gen(rank, t)));
            inv_imgs.push_back(conj(gen(rank, p), gen(rank, t)));
          } else {
            imgs.push_back(gen(rank, t));
            inv_imgs.push_back(gen(rank, t));
          }
        }
        actions.emplace(ActionKey{j, p, k},
                        ActionPair{EndoTable(rank, std::move(imgs)),
                                   EndoTable(rank, std::move(inv_imgs))});
      }

  Witness w;
  w.ambient_rank = n;
  for (int i = 1; i < n; ++i)
    for (int p = 1; p <= i + 1; ++p) {
      std::vector<Word> imgs, inv_imgs;
      for (int t = 1; t <= n; ++t) {
        imgs.push_back(t <= i + 1 ? conj(invert(gen(n, p)), gen(n, t))
                                  : gen(n, t));
        inv_imgs.push_back(t <= i + 1 ? conj(gen(n, p), gen(n, t)) : gen(n, t));
      }
      w.tables.emplace(std::make_pair(i, p),
                       WitnessEntry{EndoTable(n, std::move(imgs)),
                                    EndoTable(n, std::move(inv_imgs))});
    }

  return PresetBundle{
      "partial_inner(" + std::to_string(n) + ")",
      "partial inner automorphism group I_n built from the simultaneous "
      "conjugations c_ki (the Bardakov-Neshchadim decomposition); tables "
      "certified against the c_ki witness automorphisms of F_n",
      TowerSpec(std::move(factors), std::move(actions)), std::move(w)};
}

std::string default_data_dir() {
  if (const char* env = std::getenv("MAGORD_DATA_DIR")) return env;
  return MAGORD_DEFAULT_DATA_DIR;
}

PresetBundle pure_monomial(int r, int n, const std::string& data_dir) {
  if (r < 1 || n < 1)
    throw std::invalid_argument("pure_monomial needs r >= 1 and n >= 1");
  if (n == 1) {
    return PresetBundle{
        "pure_monomial(" + std::to_string(r) + ",1)",
        "orbit configuration space of C* at one point: the infinite cyclic "
        "group, no actions",
        TowerSpec({{1, FactorKind::Free}}, {}), std::nullopt};
  }
  if (r > 3 || n > 3)
    throw std::invalid_argument(
        "pure_monomial: unsupported parameters (shipped data covers r <= 3, "
        "n <= 3); supply a tower-spec file for larger cases");
  std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
  std::string path = dir + "/presets/pure_monomial_r" + std::to_string(r) +
                     "_n" + std::to_string(n) + ".json";
  TowerFile file = load_tower_file(path);
  for (int j = 1; j <= n; ++j)
    if (file.spec.factor(j).rank != r * (j - 1) + 1)
      throw std::runtime_error("preset data file " + path +
                               " has unexpected factor ranks");
  return PresetBundle{"pure_monomial(" + std::to_string(r) + "," +
                          std::to_string(n) + ")",
                      file.provenance, std::move(file.spec), std::nullopt};
}

namespace {

/// Conjugation action of a letter sequence on factor k, as one table.
/// The action map is an anti-homomorphism, so letters compose onto the
/// accumulator from the left.
EndoTable conj_action(const TowerSpec& s, const std::vector<TowerGen>& letters,
                      int k) {
  EndoTable acc = EndoTable::identity(s.factor(k).rank);
  for (const auto& l : letters) {
    const EndoTable* t = s.action(l.factor, l.gen, k, l.exp < 0);
    if (t == nullptr) continue;
    long long reps = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < reps; ++i) acc = compose(*t, acc);
  }
  return acc;
}

/// rho of a factor-j word under the witness tables, in product order.
EndoTable witness_of_word(const Witness& w, int factor, const Word& word) {
  EndoTable acc = EndoTable::identity(w.ambient_rank);
  for (const auto& syl : word.syllables()) {
    auto it = w.tables.find({factor, syl.gen});
    if (it == w.tables.end())
      throw std::runtime_error("witness table missing for g" +
                               std::to_string(factor) + "." +
                               std::to_string(syl.gen));
    const EndoTable& t = syl.exp > 0 ? it->second.table : it->second.inverse;
    long long reps = syl.exp < 0 ? -syl.exp : syl.exp;
    for (long long i = 0; i < reps; ++i) acc = compose(acc, t);
  }
  return acc;
}

Word action_image(const TowerSpec& s, int i, int p, int j, int q) {
  const EndoTable* t = s.action(i, p, j, false);
  return t ? t->image(q) : Word::generator(s.factor(j).rank, q);
}

}  // namespace

std::string PresetReport::str() const {
  std::string out = spec_report.str();
  for (const auto& f : failures) {
    out += f;
    out += '\n';
  }
  if (ok())
    out += "preset clean (" + std::to_string(checks_run) + " checks)\n";
  return out;
}

PresetReport validate_preset(const PresetBundle& b) {
  PresetReport report;
  report.spec_report = validate_spec(b.tower);
  const TowerSpec& s = b.tower;
  int l = s.factor_count();

  // Defining relations at the action level: conjugating factor k by both
  // sides of x_(i,p)^-1 x_(j,q) x_(i,p) = W must give the same table.
  for (int k = 3; k <= l; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int p = 1; p <= s.factor(i).rank; ++p)
          for (int q = 1; q <= s.factor(j).rank; ++q) {
            std::vector<TowerGen> lhs = {{i, p, -1}, {j, q, 1}, {i, p, 1}};
            std::vector<TowerGen> rhs;
            for (const auto& syl : action_image(s, i, p, j, q).syllables())
              rhs.push_back({j, syl.gen, syl.exp});
            ++report.checks_run;
            if (!(conj_action(s, lhs, k) == conj_action(s, rhs, k)))
              report.failures.push_back(
                  "action incompatibility: relation of g" + std::to_string(i) +
                  "." + std::to_string(p) + " and g" + std::to_string(j) + "." +
                  std::to_string(q) + " acts inconsistently on factor " +
                  std::to_string(k));
          }

  if (b.witness) {
    const Witness& w = *b.witness;
    for (int i = 1; i <= l; ++i)
      for (int p = 1; p <= s.factor(i).rank; ++p) {
        auto it = w.tables.find({i, p});
        if (it == w.tables.end()) {
          report.failures.push_back("witness table missing for g" +
                                    std::to_string(i) + "." + std::to_string(p));
          continue;
        }
        ++report.checks_run;
        if (!verify_inverse_pair(it->second.table, it->second.inverse))
          report.failures.push_back("witness inverse pair fails for g" +
                                    std::to_string(i) + "." + std::to_string(p));
      }
    if (report.failures.empty()) {
      for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
          for (int p = 1; p <= s.factor(i).rank; ++p)
            for (int q = 1; q <= s.factor(j).rank; ++q) {
              const WitnessEntry& wg = w.tables.at({i, p});
              const WitnessEntry& wh = w.tables.at({j, q});
              // g^-1 h g as an ambient automorphism
              EndoTable lhs =
                  compose(wg.inverse, compose(wh.table, wg.table));
              EndoTable rhs =
                  witness_of_word(w, j, action_image(s, i, p, j, q));
              ++report.checks_run;
              if (!(lhs == rhs))
                report.failures.push_back(
                    "witness relation fails: g" + std::to_string(i) + "." +
                    std::to_string(p) + " conjugating g" + std::to_string(j) +
                    "." + std::to_string(q));
            }
    }
  }
  return report;
}

PresetBundle load_preset(const std::string& ref, const std::string& data_dir) {
  auto colon = ref.find(':');
  std::string name = ref.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::string rest = ref.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      try {
        args.push_back(std::stoi(tok));
      } catch (...) {
        throw std::invalid_argument("bad preset argument '" + tok + "' in '" +
                                    ref + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto want = [&](size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("preset '" + name + "' takes " +
                                  std::to_string(count) + " argument(s), e.g. " +
                                  name + (count == 1 ? ":3" : ":2,2"));
  };
  if (name == "pure_braid") {
    want(1);
    return pure_braid(args[0]);
  }
  if (name == "upper_mccool") {
    want(1);
    return upper_mccool(args[0]);
  }
  if (name == "partial_inner") {
    want(1);
    return partial_inner(args[0]);
  }
  if (name == "pure_monomial") {
    want(2);
    return pure_monomial(args[0], args[1], data_dir);
  }
  throw std::invalid_argument("unknown preset '" + name + "'; known: " +
                              "pure_braid, upper_mccool, partial_inner, "
                              "pure_monomial");
}

std::vector<std::string> preset_names() {
  return {"pure_braid", "upper_mccool", "partial_inner", "pure_monomial"};
}

TowerFile to_tower_file(const PresetBundle& b) {
  return TowerFile{b.tower, b.name, b.provenance, b.witness};
}

}  // namespace magord

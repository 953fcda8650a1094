#include "magord/proptest.hpp"

#include <algorithm>
#include <stdexcept>

namespace magord {

Word random_reduced_word(Rng& rng, int rank, int max_len) {
  int len = static_cast<int>(rng.below(static_cast<uint64_t>(max_len) + 1));
  std::vector<Syllable> letters;
  int prev_gen = 0;
  long long prev_exp = 0;
  for (int i = 0; i < len; ++i) {
    while (true) {
      int g = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(rank)));
      long long e = rng.below(2) == 0 ? 1 : -1;
      if (g == prev_gen && e == -prev_exp) continue;  // would cancel
      letters.push_back({g, e});
      prev_gen = g;
      prev_exp = e;
      break;
    }
  }
  return Word(rank, letters);
}

TowerElement random_element(Rng& rng, const TowerSpec& s, int max_len) {
  std::vector<Word> comps;
  comps.reserve(static_cast<size_t>(s.factor_count()));
  for (int i = 1; i <= s.factor_count(); ++i)
    comps.push_back(random_reduced_word(rng, s.factor(i).rank, max_len));
  return TowerElement(std::move(comps));
}

EndoTable random_ia_table(Rng& rng, int rank, int max_gens) {
  if (rank < 2)
    throw std::invalid_argument("random_ia_table needs rank >= 2");
  EndoTable acc = EndoTable::identity(rank);
  int count = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_gens)));
  for (int t = 0; t < count; ++t) {
    bool commutator_kind = rank >= 3 && rng.below(2) == 0;
    bool inverted = rng.below(2) == 0;
    int a = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(rank)));
    std::vector<Word> imgs;
    for (int j = 1; j <= rank; ++j) imgs.push_back(Word::generator(rank, j));
    if (commutator_kind) {
      int b, c;
      do {
        b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(rank)));
      } while (b == a);
      do {
        c = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(rank)));
      } while (c == a || c == b);
      if (inverted) std::swap(b, c);
      // x_a -> x_a [x_b, x_c]
      imgs[static_cast<size_t>(a - 1)] =
          Word(rank, {{a, 1}, {b, 1}, {c, 1}, {b, -1}, {c, -1}});
    } else {
      int b;
      do {
        b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(rank)));
      } while (b == a);
      long long e = inverted ? -1 : 1;
      // x_a -> x_b^-e x_a x_b^e
      imgs[static_cast<size_t>(a - 1)] = Word(rank, {{b, -e}, {a, 1}, {b, e}});
    }
    acc = compose(EndoTable(rank, std::move(imgs)), acc);
  }
  return acc;
}

std::vector<Word> all_reduced_words(int rank, int max_len) {
  std::vector<Word> out;
  out.push_back(Word::identity(rank));
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      const Word w = out[i];
      int last_gen = w.syllables().empty() ? 0 : w.syllables().back().gen;
      long long last_sign =
          w.syllables().empty()
              ? 0
              : (w.syllables().back().exp > 0 ? 1 : -1);
      for (int g = 1; g <= rank; ++g)
        for (long long e : {1LL, -1LL}) {
          if (g == last_gen && e == -last_sign) continue;
          out.push_back(multiply(w, Word::generator(rank, g, e)));
        }
    }
    level_begin = level_end;
  }
  return out;
}

PropContext PropContext::free_group(int rank) {
  return {TowerSpec({{rank, FactorKind::Free}}, {}),
          "free rank " + std::to_string(rank), "--rank " + std::to_string(rank)};
}

PropContext PropContext::reduced_group(int rank) {
  return {TowerSpec({{rank, FactorKind::Reduced}}, {}),
          "reduced rank " + std::to_string(rank),
          "--reduced --rank " + std::to_string(rank)};
}

PropContext PropContext::tower(TowerSpec s, std::string label,
                               std::string recheck_flags) {
  return {std::move(s), std::move(label), std::move(recheck_flags)};
}

bool PropContext::single_free() const {
  return spec.factor_count() == 1 && spec.factor(1).kind == FactorKind::Free;
}

bool PropContext::single_reduced() const {
  return spec.factor_count() == 1 && spec.factor(1).kind == FactorKind::Reduced;
}

namespace {

std::string word_arg(const PropContext& ctx, const TowerElement& g) {
  if (ctx.spec.factor_count() == 1) return to_string(g.component(1));
  return to_string(g);
}

std::string recheck_compare(const PropContext& ctx, const TowerElement& a,
                            const TowerElement& b) {
  return "magord compare " + ctx.recheck_flags + " \"" + word_arg(ctx, a) +
         "\" \"" + word_arg(ctx, b) + "\"";
}

struct Runner {
  const PropContext& ctx;
  const PropOptions& opts;
  PropResult result;
  Rng rng;

  Runner(std::string suite, const PropContext& c, const PropOptions& o)
      : ctx(c), opts(o), rng(o.seed) {
    result.suite = std::move(suite);
    result.context = c.label;
  }

  Ordering cmp(const TowerElement& a, const TowerElement& b) {
    return tower_compare(a, b, ctx.spec, opts.compare).ord;
  }

  void fail(std::string what, const TowerElement& a, const TowerElement& b) {
    result.failures.push_back({std::move(what), recheck_compare(ctx, a, b)});
  }

  TowerElement rand_elem() { return random_element(rng, ctx.spec, opts.max_len); }

  TowerElement mul(const TowerElement& a, const TowerElement& b) {
    return tower_multiply(a, b, ctx.spec);
  }

  TowerElement inv(const TowerElement& a) { return tower_invert(a, ctx.spec); }

  TowerElement ident() { return TowerElement::identity(ctx.spec); }
};

PropResult suite_order_axioms(const PropContext& ctx, const PropOptions& opts) {
  Runner r("order-axioms", ctx, opts);
  if (ctx.spec.factor_count() == 1) {
    // exhaustive over all reduced words of bounded length
    bool reduced = ctx.single_reduced();
    std::vector<Word> words = all_reduced_words(ctx.spec.factor(1).rank, opts.max_len);
    size_t n = words.size();
    std::vector<Ordering> m(n * n, Ordering::Equal);
    auto compare1 = [&](const Word& u, const Word& v) {
      return reduced ? reduced_compare(u, v).ord
                     : magnus_compare(u, v, opts.compare).ord;
    };
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        m[i * n + j] = compare1(words[i], words[j]);
        ++r.result.cases;
      }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        bool equal_elements = reduced ? reduced_equal(words[i], words[j])
                                      : words[i] == words[j];
        TowerElement a({words[i]}), b({words[j]});
        if ((m[i * n + j] == Ordering::Equal) != equal_elements)
          r.fail("trichotomy: Equal verdict disagrees with equality of " +
                     to_string(words[i]) + " and " + to_string(words[j]),
                 a, b);
        if (m[i * n + j] != flip(m[j * n + i]))
          r.fail("antisymmetry fails for " + to_string(words[i]) + " vs " +
                     to_string(words[j]),
                 a, b);
      }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (m[i * n + j] == Ordering::Greater) continue;
        for (size_t k = 0; k < n; ++k) {
          if (m[j * n + k] == Ordering::Greater) continue;
          ++r.result.cases;
          if (m[i * n + k] == Ordering::Greater) {
            r.fail("transitivity fails on (" + to_string(words[i]) + ", " +
                       to_string(words[j]) + ", " + to_string(words[k]) + ")",
                   TowerElement({words[i]}), TowerElement({words[k]}));
            if (r.result.failures.size() > 5) return r.result;
          }
        }
      }
    return r.result;
  }
  // towers: randomized triples
  for (int it = 0; it < opts.iterations; ++it) {
    TowerElement a = r.rand_elem(), b = r.rand_elem(), c = r.rand_elem();
    ++r.result.cases;
    Ordering ab = r.cmp(a, b), ba = r.cmp(b, a);
    if (ab != flip(ba)) r.fail("antisymmetry fails", a, b);
    if ((ab == Ordering::Equal) != tower_equal(a, b, ctx.spec))
      r.fail("Equal verdict disagrees with componentwise equality", a, b);
    Ordering bc = r.cmp(b, c), ac = r.cmp(a, c);
    if (ab != Ordering::Greater && bc != Ordering::Greater &&
        ac == Ordering::Greater)
      r.fail("transitivity fails", a, c);
  }
  return r.result;
}

PropResult suite_bi_invariance(const PropContext& ctx, const PropOptions& opts) {
  Runner r("bi-invariance", ctx, opts);
  for (int it = 0; it < opts.iterations; ++it) {
    TowerElement u = r.rand_elem(), v = r.rand_elem();
    Ordering uv = r.cmp(u, v);
    if (uv == Ordering::Equal) continue;
    if (uv == Ordering::Greater) std::swap(u, v);
    TowerElement c = r.rand_elem(), d = r.rand_elem();
    TowerElement cud = r.mul(r.mul(c, u), d);
    TowerElement cvd = r.mul(r.mul(c, v), d);
    ++r.result.cases;
    if (r.cmp(cud, cvd) != Ordering::Less)
      r.fail("bi-invariance fails: u < v but not cud < cvd (u=" +
                 word_arg(ctx, u) + ", v=" + word_arg(ctx, v) + ", c=" +
                 word_arg(ctx, c) + ", d=" + word_arg(ctx, d) + ")",
             cud, cvd);
  }
  return r.result;
}

PropResult suite_ia_invariance(const PropContext& ctx, const PropOptions& opts) {
  if (ctx.spec.factor_count() != 1)
    throw std::invalid_argument(
        "ia-invariance runs on a plain free or reduced group context");
  Runner r("ia-invariance", ctx, opts);
  int rank = ctx.spec.factor(1).rank;
  bool reduced = ctx.single_reduced();
  for (int it = 0; it < opts.iterations; ++it) {
    EndoTable phi = random_ia_table(r.rng, rank, 4);
    Word u = random_reduced_word(r.rng, rank, opts.max_len);
    Word v = random_reduced_word(r.rng, rank, opts.max_len);
    Ordering before = reduced ? reduced_compare(u, v).ord
                              : magnus_compare(u, v, opts.compare).ord;
    Word pu = phi.apply(u), pv = phi.apply(v);
    Ordering after = reduced ? reduced_compare(pu, pv).ord
                             : magnus_compare(pu, pv, opts.compare).ord;
    ++r.result.cases;
    if (before != after)
      r.fail("IA table changes the verdict of " + to_string(u) + " vs " +
                 to_string(v) + " (table: " + to_string(phi) + ")",
             TowerElement({pu}), TowerElement({pv}));
  }
  return r.result;
}

PropResult suite_positive_cone(const PropContext& ctx, const PropOptions& opts) {
  Runner r("positive-cone", ctx, opts);
  TowerElement one = r.ident();
  auto positive = [&](Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
      TowerElement g = r.rand_elem();
      Ordering o = r.cmp(one, g);
      if (o == Ordering::Less) return g;
      if (o == Ordering::Greater) return r.inv(g);
    }
    throw std::runtime_error("could not sample a nontrivial element");
  };
  for (int it = 0; it < opts.iterations; ++it) {
    TowerElement g = positive(r.rng), h = positive(r.rng);
    TowerElement gh = r.mul(g, h);
    ++r.result.cases;
    if (r.cmp(one, gh) != Ordering::Less)
      r.fail("positive cone not closed under product", one, gh);
    TowerElement a = r.rand_elem();
    TowerElement conj = r.mul(r.mul(a, g), r.inv(a));
    ++r.result.cases;
    if (r.cmp(one, conj) != Ordering::Less)
      r.fail("positive cone not closed under conjugation", one, conj);
  }
  return r.result;
}

PropResult suite_gen_torsion(const PropContext& ctx, const PropOptions& opts) {
  Runner r("gen-torsion", ctx, opts);
  TowerElement one = r.ident();
  for (int it = 0; it < opts.iterations; ++it) {
    TowerElement g = r.rand_elem();
    Ordering o = r.cmp(one, g);
    if (o == Ordering::Equal) continue;
    if (o == Ordering::Greater) g = r.inv(g);  // make g positive
    int k = 1 + static_cast<int>(r.rng.below(5));
    TowerElement prod = one;
    bool conjugates_ok = true;
    for (int t = 0; t < k; ++t) {
      TowerElement h = r.rand_elem();
      TowerElement c = r.mul(r.mul(h, g), r.inv(h));
      if (r.cmp(one, c) != Ordering::Less) {
        r.fail("conjugate of a positive element is not positive", one, c);
        conjugates_ok = false;
        break;
      }
      prod = r.mul(prod, c);
    }
    if (!conjugates_ok) continue;
    ++r.result.cases;
    if (tower_equal(prod, one, ctx.spec))
      r.fail("generalized torsion: product of conjugates is trivial", prod, one);
    else if (r.cmp(one, prod) != Ordering::Less)
      r.fail("product of positive conjugates is not positive", one, prod);
  }
  return r.result;
}

PropResult suite_ab_respecting(const PropContext& ctx, const PropOptions& opts) {
  Runner r("ab-respecting", ctx, opts);
  for (int it = 0; it < opts.iterations; ++it) {
    TowerElement g = r.rand_elem(), h = r.rand_elem();
    Ordering o = r.cmp(g, h);
    if (o == Ordering::Equal) continue;
    if (o == Ordering::Greater) std::swap(g, h);
    ++r.result.cases;
    if (tower_ab_compare(tower_ab(g, ctx.spec), tower_ab(h, ctx.spec)) ==
        Ordering::Greater)
      r.fail("abelianization reverses a strict comparison", g, h);
  }
  return r.result;
}

PropResult suite_diagram(const PropContext& ctx, const PropOptions& opts) {
  if (ctx.spec.factor_count() < 2)
    throw std::invalid_argument("diagram needs a tower with at least 2 factors");
  Runner r("diagram", ctx, opts);
  TowerSpec lower = ctx.spec.retract();
  for (int it = 0; it < opts.iterations; ++it) {
    TowerElement g = r.rand_elem();
    TowerAb top = tower_ab(g, ctx.spec);
    top.pop_back();  // projection: drop the innermost block
    TowerAb bottom = tower_ab(retraction(g, ctx.spec), lower);
    ++r.result.cases;
    if (top != bottom)
      r.fail("ab-then-project differs from retract-then-ab", g, g);
  }
  return r.result;
}

}  // namespace

PropResult run_suite(const std::string& suite, const PropContext& ctx,
                     const PropOptions& opts) {
  if (suite == "order-axioms") return suite_order_axioms(ctx, opts);
  if (suite == "bi-invariance") return suite_bi_invariance(ctx, opts);
  if (suite == "ia-invariance") return suite_ia_invariance(ctx, opts);
  if (suite == "positive-cone") return suite_positive_cone(ctx, opts);
  if (suite == "gen-torsion") return suite_gen_torsion(ctx, opts);
  if (suite == "ab-respecting") return suite_ab_respecting(ctx, opts);
  if (suite == "diagram") return suite_diagram(ctx, opts);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<std::string> suite_names() {
  return {"order-axioms", "bi-invariance",  "ia-invariance", "positive-cone",
          "gen-torsion",  "ab-respecting", "diagram"};
}

}  // namespace magord

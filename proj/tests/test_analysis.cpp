#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "morphic/analysis.hpp"
#include "morphic/errors.hpp"
#include "morphic/verify.hpp"
#include "support/corpus.hpp"

using namespace morphic;
using namespace morphic::testing;

namespace {
  Morphism const kLinear      = morph({{'s', "sa"}, {'a', "a"}});
  Morphism const kExponential = morph({{'c', "cbaa"}, {'a', "aa"}, {'b', "b"}});
}  // namespace

TEST_CASE("mortal letters") {
  CHECK(mortal_set(morph({{'m', ""}, {'a', "m"}})) == LetterSet{L('m'), L('a')});
  CHECK(mortal_set(morph({{'a', "aa"}})).empty());
  CHECK(mortal_set(kExponential).empty());
  CHECK(is_mortal(kLinear, Str()));
}

TEST_CASE("recursive letters") {
  CHECK(is_recursive(morph({{'a', "a"}}), L('a')));
  CHECK(is_recursive(kLinear, L('s')));
  CHECK_FALSE(is_recursive(morph({{'a', "b"}, {'b', "c"}, {'c', "c"}}), L('a')));
}

TEST_CASE("bounded letters") {
  CHECK(is_bounded(morph({{'a', "a"}}), L('a')));
  CHECK_FALSE(is_bounded(morph({{'a', "aa"}}), L('a')));
  CHECK_FALSE(is_bounded(kLinear, L('s')));
  CHECK(is_bounded(kLinear, L('a')));
  // a cycle of single-letter images stays bounded
  CHECK(is_bounded(morph({{'a', "bm"}, {'b', "a"}, {'m', ""}}), L('a')));
}

TEST_CASE("rank table of small morphisms") {
  auto t = rank_table(kLinear);
  CHECK(t.rank(L('a')) == 0u);
  CHECK(t.rank(L('s')) == 1u);
  CHECK(t.level(L('a')) == 1u);
  CHECK(t.level(L('s')) == 3u);

  CHECK_FALSE(rank_table(morph({{'a', "aa"}})).rank(L('a')).has_value());

  auto m = rank_table(morph({{'m', ""}}));
  CHECK(m.rank(L('m')) == 0u);
  CHECK(m.level(L('m')) == 0u);
  CHECK(m.mortal(L('m')));

  // non-recursive letter over a linear one: level 2 rank + 2
  auto n = rank_table(morph({{'x', "s"}, {'s', "sa"}, {'a', "a"}}));
  CHECK(n.rank(L('x')) == 1u);
  CHECK(n.level(L('x')) == 4u);
}

TEST_CASE("rank_of and level_of") {
  auto t = rank_table(kLinear);
  CHECK(level_of(t, str("sa")) == 3u);
  CHECK(rank_of(t, str("a")) == 0u);
  CHECK_THROWS_AS(level_of(t, Str()), EmptyString);
  auto e = rank_table(kExponential);
  CHECK_FALSE(rank_of(e, str("cb")).has_value());
}

TEST_CASE("normalization powers") {
  CHECK(normalize(kLinear).t == 1);
  auto swap = normalize(morph({{'a', "b"}, {'b', "a"}}));
  CHECK(swap.t == 2);
  CHECK(swap.g.image(L('a')).to_string() == "a");
  CHECK(normalize(kExponential).t == 1);
  CHECK(is_normalized(kLinear));
  CHECK_FALSE(is_normalized(morph({{'a', "b"}, {'b', "a"}})));

  NormalizeOptions tight;
  tight.max_power = 1;
  CHECK_THROWS_AS(normalize(morph({{'a', "b"}, {'b', "a"}}), tight),
                  NormalizationNotFound);
}

TEST_CASE("growth exponents") {
  CHECK(growth_exponent(kLinear, str("s")).degree == 1u);
  CHECK(growth_exponent(morph({{'a', "aa"}}), str("a")).exponential());
  CHECK(growth_exponent(kExponential, str("c")).exponential());
  auto mortal = growth_exponent(morph({{'m', ""}}), str("m"));
  CHECK(mortal.mortal);
  CHECK(mortal.degree == 0u);
  CHECK_THROWS_AS(growth_exponent(kLinear, Str()), EmptyString);
}

TEST_CASE("rank table properties on random morphisms") {
  auto const corpus = morphism_corpus();
  for (auto const& h : corpus) {
    auto const t = rank_table(h);
    auto const n = h.size();
    for (Letter c : h.domain()) {
      auto const& e = t[c];
      CAPTURE(c);
      // mortal iff h^|A|(c) is empty
      CHECK(e.mortal == iterate(h, Str{c}, n).empty());
      CHECK(e.rank.has_value() == e.level.has_value());
      CHECK(is_bounded(h, c) == brute_bounded(h, c));
      if (e.mortal) {
        CHECK(e.rank == 0u);
        CHECK(e.level == 0u);
      } else if (e.rank) {
        CHECK(e.level == 2 * *e.rank + (e.recursive ? 1 : 2));
      }
      if (!e.rank) {
        continue;
      }
      // rank is invariant under images
      auto const image = h.image(c);
      if (!image.empty()) {
        CHECK(rank_of(t, image) == e.rank);
      }
      // the rank drops by one across a recursive self-occurrence
      if (*e.rank >= 1) {
        for (std::size_t i = 0; i < image.size(); ++i) {
          if (image[i] == c) {
            auto rest = image.substr(0, i) + image.substr(i + 1);
            if (!rest.empty()) {
              CHECK(rank_of(t, rest) == *e.rank - 1);
            }
          }
        }
      }
    }
    // ranks are stable under powers
    for (std::size_t p = 2; p <= 3; ++p) {
      Morphism power = h;
      for (std::size_t k = 1; k < p; ++k) {
        power = compose(power, h);
      }
      auto const tp = rank_table(power);
      for (Letter c : h.domain()) {
        CHECK(tp.rank(c) == t.rank(c));
      }
    }
  }
}

TEST_CASE("normalized powers satisfy their consequences") {
  auto const corpus = morphism_corpus();
  for (auto const& h : corpus) {
    auto const g = normalize(h);
    CHECK(is_normalized(g.g));
    CHECK(g.g == [&] {
      Morphism p = h;
      for (std::size_t k = 1; k < g.t; ++k) {
        p = compose(p, h);
      }
      return p;
    }());
    for (Letter c : g.g.domain()) {
      auto const& e     = g.ranks[c];
      auto const  image = g.g.image(c);
      CAPTURE(c);
      CHECK(image.alphabet() == apply(g.g, image).alphabet());
      if (e.mortal) {
        CHECK(image.empty());
      }
      if (e.recursive) {
        CHECK(image.contains(c));
      }
      if (e.rank == 0u) {
        CHECK(apply(g.g, image) == image);
      }
      // level drops by one under g when c does not reproduce itself
      if (!e.mortal && e.level && !image.contains(c)) {
        CHECK(level_of(g.ranks, image) == *e.level - 1);
      }
    }
  }
}

TEST_CASE("growth exponent of a prolongable polynomial start is positive") {
  auto const corpus = morphism_corpus();
  for (auto const& h : corpus) {
    for (Letter c : h.domain()) {
      if (!is_prolongable(h, c)) {
        continue;
      }
      auto g = growth_exponent(h, Str{c});
      if (!g.exponential()) {
        CHECK(*g.degree >= 1);
      }
    }
  }
}

// Seeded generators and naive reference evaluators shared by the tests.
//
// The reference evaluators work on std::string over single-character letters
// and follow the definitions literally, so they share no code with the
// library routines they are compared against.

#ifndef MORPHIC_TESTS_SUPPORT_CORPUS_HPP_
#define MORPHIC_TESTS_SUPPORT_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "morphic/letter.hpp"
#include "morphic/morphism.hpp"
#include "morphic/zigzag.hpp"

namespace morphic::testing {

  inline constexpr std::uint32_t kSeed        = 20240611;
  inline constexpr std::size_t   kCorpusSize  = 240;
  inline constexpr std::size_t   kMorphisms   = 240;
  inline constexpr char const*   kAlphabet    = "abcde";

  inline Str str(std::string_view text) {
    return Str::from_chars(text);
  }

  inline Letter L(char c) {
    return Letter::of(c);
  }

  //! Builds a morphism from "a:ab b:b c:" style rules.
  inline Morphism morph(std::vector<std::pair<char, std::string>> const& rules) {
    std::vector<Morphism::Rule> out;
    for (auto const& [a, image] : rules) {
      out.emplace_back(Letter::of(a), Str::from_chars(image));
    }
    return Morphism(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Random zigzag lists
  ////////////////////////////////////////////////////////////////////////

  class ZigzagGenerator {
   public:
    explicit ZigzagGenerator(std::uint32_t seed) : _rng(seed) {}

    //! A spec of exactly the given depth (1..4).
    ZigzagSpec spec(std::size_t depth) {
      Str q = word(uniform(0, 3));
      return ZigzagSpec{std::move(q), list(depth)};
    }

    ZigzagSpec spec() {
      return spec(uniform(1, 4));
    }

    std::size_t uniform(std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(_rng);
    }

   private:
    Str word(std::size_t n) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) {
        s.push_back(kAlphabet[uniform(0, 4)]);
      }
      return Str::from_chars(s);
    }

    ZigzagList list(std::size_t depth) {
      std::size_t const size  = uniform(1, depth == 1 ? 3 : 2);
      std::size_t const deep  = uniform(0, size - 1);
      std::vector<ZigzagTerm> terms;
      for (std::size_t j = 0; j < size; ++j) {
        std::size_t d = 1;
        if (depth > 1) {
          d = j == deep ? depth : uniform(1, depth);
        }
        terms.push_back(term(d));
      }
      return ZigzagList(std::move(terms));
    }

    // A term of the given depth (1 is a static term).
    ZigzagTerm term(std::size_t depth) {
      if (depth == 1) {
        return ZigzagTerm::stasis(word(uniform(1, 3)));
      }
      auto sub = list(depth - 1);
      return uniform(0, 1) == 0 ? ZigzagTerm::forward(std::move(sub))
                                : ZigzagTerm::backward(std::move(sub));
    }

    std::mt19937 _rng;
  };

  inline std::vector<ZigzagSpec> zigzag_corpus() {
    ZigzagGenerator         gen(kSeed);
    std::vector<ZigzagSpec> out;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
      out.push_back(gen.spec(1 + i % 4));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random morphisms
  ////////////////////////////////////////////////////////////////////////

  inline Morphism random_morphism(std::mt19937& rng) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    std::size_t const       n = pick(1, 5);
    std::vector<Morphism::Rule> rules;
    for (std::size_t i = 0; i < n; ++i) {
      std::string image;
      for (std::size_t k = pick(0, 3); k > 0; --k) {
        image.push_back(kAlphabet[pick(0, n - 1)]);
      }
      rules.emplace_back(Letter::of(kAlphabet[i]), Str::from_chars(image));
    }
    return Morphism(std::move(rules));
  }

  inline std::vector<Morphism> morphism_corpus() {
    std::mt19937          rng(kSeed + 1);
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < kMorphisms; ++i) {
      out.push_back(random_morphism(rng));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reference evaluators
  ////////////////////////////////////////////////////////////////////////

  // Zigzag lists as plain nested data, converted once from the library type.
  struct NaiveTerm {
    char                   kind;  // 'S', 'F', 'B'
    std::string            payload;
    std::vector<NaiveTerm> sub;
  };

  inline std::vector<NaiveTerm> naive(ZigzagList const& l) {
    std::vector<NaiveTerm> out;
    for (auto const& t : l) {
      if (t.is_stasis()) {
        out.push_back({'S', t.payload().to_string(), {}});
      } else {
        out.push_back({t.kind() == TermKind::forward ? 'F' : 'B', "",
                       naive(t.sublist())});
      }
    }
    return out;
  }

  inline std::string naive_block(std::vector<NaiveTerm> const& l,
                                 std::size_t                   i) {
    std::string out;
    for (auto const& t : l) {
      if (t.kind == 'S') {
        out += t.payload;
      } else if (t.kind == 'F') {
        for (std::size_t j = 1; j <= i; ++j) {
          out += naive_block(t.sub, j);
        }
      } else {
        for (std::size_t j = i; j >= 1; --j) {
          out += naive_block(t.sub, j);
        }
      }
    }
    return out;
  }

  inline std::string naive_expand(ZigzagSpec const& spec, std::size_t n) {
    auto const  l   = naive(spec.list);
    std::string out = spec.prefix.to_string();
    for (std::size_t i = 1; out.size() < n; ++i) {
      out += naive_block(l, i);
    }
    out.resize(n);
    return out;
  }

  // Morphisms over single-character letters as a lookup table.
  inline std::map<char, std::string> table(Morphism const& h) {
    std::map<char, std::string> out;
    for (auto const& [a, image] : h.rules()) {
      out[a.glyph()] = image.to_string();
    }
    return out;
  }

  inline std::string naive_apply(std::map<char, std::string> const& h,
                                 std::string const&                 x) {
    std::string out;
    for (char c : x) {
      out += h.at(c);
    }
    return out;
  }

}  // namespace morphic::testing

#endif  // MORPHIC_TESTS_SUPPORT_CORPUS_HPP_

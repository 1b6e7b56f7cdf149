#include "morphic/transforms.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "morphic/errors.hpp"

namespace morphic {

  ////////////////////////////////////////////////////////////////////////
  // MultilinearSpec / PeriodicSpec
  ////////////////////////////////////////////////////////////////////////

  MultilinearSpec::MultilinearSpec(Str prefix, std::vector<Term> terms)
      : _prefix(std::move(prefix)), _terms(std::move(terms)) {
    if (_terms.empty()) {
      throw InvalidArgument("a multilinear spec needs at least one term");
    }
    for (auto const& term : _terms) {
      if (term.base.empty()) {
        throw InvalidArgument("multilinear terms need a nonempty base string");
      }
      if (term.slope + term.offset == 0) {
        throw InvalidArgument("multilinear term " + term.base.to_string()
                              + " has a + b = 0");
      }
    }
  }

  Str MultilinearSpec::block(std::size_t n) const {
    Str out;
    for (auto const& term : _terms) {
      out += power(term.base, term.slope * n + term.offset);
    }
    return out;
  }

  PeriodicSpec::PeriodicSpec(Str prefix, Str period)
      : _prefix(std::move(prefix)), _period(std::move(period)) {
    if (_period.empty()) {
      throw InvalidArgument("the period of an ultimately periodic word must "
                            "be nonempty");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // zigzag -> morphic
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Deterministic supply of letters named <glyph>_<k>.
    class FreshLetters {
     public:
      explicit FreshLetters(std::vector<Letter> const& reserved) {
        for (Letter a : reserved) {
          _reserved.emplace(a.name());
        }
      }

      Letter make(char glyph) {
        while (true) {
          auto name = std::string(1, glyph) + "_" + std::to_string(++_counter);
          if (!_reserved.contains(name)) {
            return Letter::named(name);
          }
        }
      }

     private:
      std::unordered_set<std::string> _reserved;
      std::size_t                     _counter = 0;
    };

    // A partial (w, h, tau) for one term or list.
    struct Fragment {
      Str                                seed;
      std::vector<Letter>                letters;  // construction order
      std::unordered_map<Letter, Str>    images;
      std::unordered_map<Letter, Letter> code;

      void add(Letter a, Str image, Letter coded) {
        letters.push_back(a);
        images.emplace(a, std::move(image));
        code.emplace(a, coded);
      }

      void absorb(Fragment&& other) {
        for (Letter a : other.letters) {
          add(a, std::move(other.images.at(a)), other.code.at(a));
        }
      }

      Str image_of(Str const& x) const {
        Str out;
        for (Letter a : x) {
          out += images.at(a);
        }
        return out;
      }

      void rename(Letter from, Letter to) {
        auto swap = [&](Str const& x) {
          std::vector<Letter> out(x.begin(), x.end());
          for (auto& a : out) {
            if (a == from) {
              a = to;
            }
          }
          return Str(std::move(out));
        };
        seed = swap(seed);
        std::unordered_map<Letter, Str>    new_images;
        std::unordered_map<Letter, Letter> new_code;
        for (auto& a : letters) {
          Letter key      = a == from ? to : a;
          new_images.insert_or_assign(key, swap(images.at(a)));
          new_code.insert_or_assign(key, code.at(a));
          a               = key;
        }
        images = std::move(new_images);
        code   = std::move(new_code);
      }
    };

    Fragment list_fragment(ZigzagList const& l, FreshLetters& fresh);

    Fragment term_fragment(ZigzagTerm const& term, FreshLetters& fresh) {
      Fragment frag;
      if (term.is_stasis()) {
        frag.seed = term.payload();
        LetterSet seen;
        for (Letter c : term.payload()) {
          if (seen.insert(c).second) {
            frag.add(c, Str{c}, c);
          }
        }
        return frag;
      }
      auto inner = list_fragment(term.sublist(), fresh);
      auto const& w = inner.seed;
      if (term.kind() == TermKind::forward) {
        Letter first = w.front();
        Letter a     = fresh.make(inner.code.at(first).glyph());
        frag.seed    = Str{a} + w.substr(1);
        frag.add(a, frag.seed + inner.images.at(first), inner.code.at(first));
      } else {
        Letter last = w.back();
        Letter a    = fresh.make(inner.code.at(last).glyph());
        frag.seed   = w.substr(0, w.size() - 1) + Str{a};
        frag.add(a, inner.images.at(last) + frag.seed, inner.code.at(last));
      }
      frag.absorb(std::move(inner));
      return frag;
    }

    Fragment list_fragment(ZigzagList const& l, FreshLetters& fresh) {
      Fragment  result;
      LetterSet used;
      for (auto const& term : l) {
        auto frag = term_fragment(term, fresh);
        // A letter already used by an earlier term is renamed in this one.
        auto const letters = frag.letters;
        for (Letter c : letters) {
          if (used.contains(c)) {
            frag.rename(c, fresh.make(frag.code.at(c).glyph()));
          }
        }
        for (Letter c : frag.letters) {
          used.insert(c);
        }
        result.seed += frag.seed;
        result.absorb(std::move(frag));
      }
      return result;
    }

    std::pair<Morphism, Coding> to_morphism(Fragment const& frag) {
      std::vector<Morphism::Rule>         rules;
      std::vector<std::pair<Letter, Letter>> code;
      for (Letter a : frag.letters) {
        rules.emplace_back(a, frag.images.at(a));
        code.emplace_back(a, frag.code.at(a));
      }
      return {Morphism(std::move(rules)), Coding(code)};
    }

    void check_list_morphism(ListMorphism const&     lm,
                             ZigzagList const&       l,
                             TransformOptions const& options) {
      Str current = lm.seed;
      for (std::size_t n = 0; n < options.check_iterations; ++n) {
        if (lm.coding(current) != block(l, n + 1)) {
          throw InternalConstructionError(
              "list_to_morphism: tau(h^" + std::to_string(n)
              + "(w)) differs from block " + std::to_string(n + 1) + " of "
              + print_shorthand(l));
        }
        current = apply(lm.morphism, current);
      }
    }

    ListMorphism list_to_morphism_with(ZigzagList const&       l,
                                       FreshLetters&           fresh,
                                       TransformOptions const& options) {
      auto frag     = list_fragment(l, fresh);
      auto [h, tau] = to_morphism(frag);
      ListMorphism result{frag.seed, std::move(h), std::move(tau)};
      check_list_morphism(result, l, options);
      return result;
    }
  }  // namespace

  ListMorphism list_to_morphism(ZigzagList const&          l,
                                std::vector<Letter> const& reserved,
                                TransformOptions const&    options) {
    FreshLetters fresh(reserved);
    return list_to_morphism_with(l, fresh, options);
  }

  MorphicSpec zigzag_to_morphic(ZigzagSpec const&       spec,
                                TransformOptions const& options) {
    FreshLetters fresh(letters_of(spec));
    auto lm = list_to_morphism_with(spec.list, fresh, options);
    auto const& w  = lm.seed;
    auto const& h  = lm.morphism;
    auto const& tau = lm.coding;

    std::vector<Morphism::Rule>            rules;
    std::vector<std::pair<Letter, Letter>> code;

    // s = c_1 ... c_|q| d_1 ... d_|w| h(w); the c_i and d_i vanish after one
    // step and only carry the prefix and w through the coding.
    Str s;
    std::vector<Morphism::Rule>            vanishing;
    std::vector<std::pair<Letter, Letter>> vanishing_code;
    for (Letter qa : spec.prefix) {
      Letter ci = fresh.make(qa.glyph());
      s.push_back(ci);
      vanishing.emplace_back(ci, Str());
      vanishing_code.emplace_back(ci, qa);
    }
    for (Letter wa : w) {
      Letter di = fresh.make(tau(wa).glyph());
      s.push_back(di);
      vanishing.emplace_back(di, Str());
      vanishing_code.emplace_back(di, tau(wa));
    }
    s += apply(h, w);

    std::unordered_map<Letter, Letter> s_code(vanishing_code.begin(),
                                              vanishing_code.end());
    auto code_of = [&](Letter x) {
      auto it = s_code.find(x);
      return it != s_code.end() ? it->second : tau(x);
    };
    auto image_of = [&](Letter x) {
      return s_code.contains(x) ? Str() : h.image(x);
    };

    Letter a = fresh.make(code_of(s[0]).glyph());
    Letter b = fresh.make(code_of(s[1]).glyph());
    rules.emplace_back(a, Str{a, b} + s.substr(2));
    code.emplace_back(a, code_of(s[0]));
    rules.emplace_back(b, image_of(s[0]) + image_of(s[1]));
    code.emplace_back(b, code_of(s[1]));
    rules.insert(rules.end(), vanishing.begin(), vanishing.end());
    code.insert(code.end(), vanishing_code.begin(), vanishing_code.end());
    for (auto const& rule : h.rules()) {
      rules.push_back(rule);
      code.emplace_back(rule.first, tau(rule.first));
    }

    // s[0] and s[1] are folded into a and b; drop what became unreachable.
    auto reachable = restrict_to_reachable(Morphism(std::move(rules)), Str{a});
    std::erase_if(code, [&](auto const& entry) {
      return !reachable.contains(entry.first);
    });
    MorphicSpec result(std::move(reachable), a, Coding(code));
    auto const  rank = rank_table(result.morphism()).rank(a);
    if (rank != depth(spec.list)) {
      throw InternalConstructionError(
          "zigzag_to_morphic: start letter rank does not match depth "
          + std::to_string(depth(spec.list)));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // morphic -> zigzag
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class ListBuilder {
     public:
      explicit ListBuilder(NormalizedMorphism const& g) : _g(g) {}

      // Terms with R(l, i) = g^{v+i}(x), mortal letters of x dropped.
      std::vector<ZigzagTerm> string_terms(Str const& x, std::size_t v) const {
        std::vector<ZigzagTerm> terms;
        for (Letter c : x) {
          if (_g.ranks.mortal(c)) {
            continue;
          }
          auto part = letter_terms(c, v);
          terms.insert(terms.end(),
                       std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return terms;
      }

     private:
      std::vector<ZigzagTerm> letter_terms(Letter c, std::size_t v) const {
        auto const& image = _g.g.image(c);
        if (!image.contains(c)) {
          if (v == 0) {
            throw InternalConstructionError("build_list: level exhausted");
          }
          return string_terms(image, v - 1);
        }
        auto const rank = *_g.ranks.rank(c);
        if (rank == 0) {
          return {ZigzagTerm::stasis(image)};
        }
        if (image.count(c) != 1) {
          throw InternalConstructionError(
              "build_list: ranked recursive letter " + std::string(c.name())
              + " occurs more than once in its own image");
        }
        std::size_t pos = 0;
        while (image[pos] != c) {
          ++pos;
        }
        auto const s        = image.substr(0, pos);
        auto const t        = image.substr(pos + 1);
        bool const s_mortal = is_dead(s);
        bool const t_mortal = is_dead(t);
        if (s_mortal && t_mortal) {
          throw InternalConstructionError(
              "build_list: both sides of a ranked recursive letter are mortal");
        }
        std::vector<ZigzagTerm> terms;
        if (!s_mortal) {
          terms.push_back(
              ZigzagTerm::backward(ZigzagList(string_terms(s, v - 1))));
        }
        terms.push_back(ZigzagTerm::stasis(iterate(_g.g, Str{c}, v)));
        if (!t_mortal) {
          terms.push_back(
              ZigzagTerm::forward(ZigzagList(string_terms(t, v - 1))));
        }
        return terms;
      }

      bool is_dead(Str const& x) const {
        for (Letter a : x) {
          if (!_g.ranks.mortal(a)) {
            return false;
          }
        }
        return true;
      }

      NormalizedMorphism const& _g;
    };
  }  // namespace

  ZigzagList build_list(NormalizedMorphism const& g,
                        Str const&                x,
                        std::size_t               v,
                        TransformOptions const&   options) {
    if (x.empty()) {
      throw PreconditionViolation("build_list: x must be nonempty");
    }
    for (Letter a : x) {
      if (!g.g.contains(a)) {
        throw PreconditionViolation("build_list: letter "
                                    + std::string(a.name())
                                    + " is not in the domain");
      }
    }
    auto const level = level_of(g.ranks, x);
    if (!level) {
      throw PreconditionViolation(
          "build_list: x contains a letter without rank");
    }
    if (*level == 0) {
      throw PreconditionViolation("build_list: x is mortal");
    }
    if (v < *level) {
      throw PreconditionViolation("build_list: v = " + std::to_string(v)
                                  + " is below level(x) = "
                                  + std::to_string(*level));
    }

    ZigzagList result(ListBuilder(g).string_terms(x, v));

    Str expected = iterate(g.g, x, v);
    for (std::size_t i = 1; i <= options.check_iterations; ++i) {
      expected = apply(g.g, expected);
      if (block(result, i) != expected) {
        throw InternalConstructionError("build_list: block "
                                        + std::to_string(i)
                                        + " differs from g^(v+i)(x)");
      }
    }
    if (depth(result) != *rank_of(g.ranks, x) + 1) {
      throw InternalConstructionError("build_list: depth is not rank + 1");
    }
    return result;
  }

  ZigzagSpec morphic_to_zigzag(MorphicSpec const&      spec,
                               TransformOptions const& options) {
    Letter const c = spec.start();
    // Letters unreachable from c do not influence the word and may grow
    // exponentially, which would make normalization needlessly expensive.
    auto const h    = restrict_to_reachable(spec.morphism(), Str{c});
    auto const rank = rank_table(h).rank(c);
    if (!rank) {
      throw ExponentialGrowth("exponential growth: the start letter "
                              + std::string(c.name())
                              + " is not polynomially bounded");
    }
    auto const g = normalize(h, options.normalize);
    auto const x = g.g.image(c).substr(1);
    auto const v = level_of(g.ranks, x);
    if (!v || *v == 0) {
      throw InternalConstructionError(
          "morphic_to_zigzag: tail of the start letter has no positive level");
    }
    auto const& tau    = spec.coding();
    Str         prefix = tau(iterate(g.g, Str{c}, *v + 1));
    auto        l      = build_list(g, x, *v, options);
    ZigzagSpec  result{std::move(prefix),
                      map_payloads(l, [&](Str const& s) { return tau(s); })};
    if (depth(result.list) != *rank) {
      throw InternalConstructionError(
          "morphic_to_zigzag: depth does not match the start letter's rank");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // periodic and multilinear
  ////////////////////////////////////////////////////////////////////////

  PeriodicSpec zigzag_to_periodic(ZigzagSpec const& spec) {
    auto const d = depth(spec.list);
    if (d != 1) {
      throw DepthMismatch("an ultimately periodic form needs depth 1, got "
                          + std::to_string(d));
    }
    Str period;
    for (auto const& term : spec.list) {
      period += term.payload();
    }
    return PeriodicSpec(spec.prefix, std::move(period));
  }

  ZigzagSpec periodic_to_zigzag(PeriodicSpec const& p) {
    return ZigzagSpec{p.prefix(),
                      ZigzagList({ZigzagTerm::stasis(p.period())})};
  }

  ZigzagSpec multilinear_to_zigzag(MultilinearSpec const& m) {
    // Block n = 0 goes into the prefix; zigzag block i is multilinear block i
    // with r^{a i + b} split as r^b (S) followed by (r^a)^i (F).
    Str                     prefix = m.prefix() + m.block(0);
    std::vector<ZigzagTerm> terms;
    for (auto const& term : m.terms()) {
      if (term.offset > 0) {
        terms.push_back(ZigzagTerm::stasis(power(term.base, term.offset)));
      }
      if (term.slope > 0) {
        terms.push_back(ZigzagTerm::forward(ZigzagList(
            {ZigzagTerm::stasis(power(term.base, term.slope))})));
      }
    }
    return ZigzagSpec{std::move(prefix), ZigzagList(std::move(terms))};
  }

  MultilinearSpec zigzag_to_multilinear(ZigzagSpec const& spec) {
    auto const d = depth(spec.list);
    if (d > 2) {
      throw DepthMismatch("a multilinear form needs depth <= 2, got "
                          + std::to_string(d));
    }
    // Zigzag block i is multilinear block n = i - 1, so a term repeated i
    // times has exponent 1 * n + 1.
    std::vector<MultilinearSpec::Term> terms;
    for (auto const& term : spec.list) {
      if (term.is_stasis()) {
        terms.push_back({term.payload(), 0, 1});
      } else {
        Str base;
        for (auto const& inner : term.sublist()) {
          base += inner.payload();
        }
        terms.push_back({std::move(base), 1, 1});
      }
    }
    return MultilinearSpec(spec.prefix, std::move(terms));
  }

}  // namespace morphic

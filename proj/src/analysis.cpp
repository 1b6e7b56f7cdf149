#include "morphic/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "morphic/errors.hpp"

namespace morphic {

  namespace {
    using Graph = std::vector<std::vector<std::size_t>>;

    // Edge i -> j for every occurrence of domain()[j] in the image of i,
    // restricted to `alive` vertices (parallel edges kept).
    Graph occurrence_graph(Morphism const& h, std::vector<bool> const& alive) {
      Graph g(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!alive[i]) {
          continue;
        }
        for (Letter b : h.image_at(i)) {
          auto j = h.index_of(b);
          if (alive[j]) {
            g[i].push_back(j);
          }
        }
      }
      return g;
    }

    class Tarjan {
     public:
      explicit Tarjan(Graph const& g)
          : _g(g),
            _index(g.size(), kUnvisited),
            _low(g.size(), 0),
            _on_stack(g.size(), false),
            _component(g.size(), 0) {
        for (std::size_t v = 0; v < g.size(); ++v) {
          if (_index[v] == kUnvisited) {
            visit(v);
          }
        }
      }

      [[nodiscard]] std::vector<std::size_t> const& component() const {
        return _component;
      }

     private:
      static constexpr std::size_t kUnvisited
          = std::numeric_limits<std::size_t>::max();

      void visit(std::size_t v) {
        _index[v] = _low[v] = _counter++;
        _stack.push_back(v);
        _on_stack[v] = true;
        for (auto w : _g[v]) {
          if (_index[w] == kUnvisited) {
            visit(w);
            _low[v] = std::min(_low[v], _low[w]);
          } else if (_on_stack[w]) {
            _low[v] = std::min(_low[v], _index[w]);
          }
        }
        if (_low[v] == _index[v]) {
          std::size_t w;
          do {
            w = _stack.back();
            _stack.pop_back();
            _on_stack[w]  = false;
            _component[w] = _components;
          } while (w != v);
          ++_components;
        }
      }

      Graph const&             _g;
      std::vector<std::size_t> _index;
      std::vector<std::size_t> _low;
      std::vector<bool>        _on_stack;
      std::vector<std::size_t> _component;
      std::vector<std::size_t> _stack;
      std::size_t              _counter    = 0;
      std::size_t              _components = 0;
    };

    std::vector<bool> mortal_flags(Morphism const& h) {
      std::vector<bool> mortal(h.size(), false);
      // Least fixpoint; each round adds at least one letter or stops.
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < h.size(); ++i) {
          if (mortal[i]) {
            continue;
          }
          auto const& img = h.image_at(i);
          if (std::all_of(img.begin(), img.end(), [&](Letter b) {
                return mortal[h.index_of(b)];
              })) {
            mortal[i] = true;
            changed   = true;
          }
        }
      }
      return mortal;
    }

    std::vector<bool> recursive_flags(Morphism const& h) {
      std::vector<bool> all(h.size(), true);
      auto              g = occurrence_graph(h, all);
      Tarjan            scc(g);
      auto const&       comp = scc.component();
      std::vector<bool> result(h.size(), false);
      for (std::size_t i = 0; i < h.size(); ++i) {
        for (auto j : g[i]) {
          if (comp[j] == comp[i]) {
            result[i] = true;
            break;
          }
        }
      }
      return result;
    }

    std::size_t saturating_add(std::size_t a, std::size_t b) {
      return a > std::numeric_limits<std::size_t>::max() - b
                 ? std::numeric_limits<std::size_t>::max()
                 : a + b;
    }

    // Total length of compose(h, g) without building it.
    std::size_t composed_size(Morphism const& h, Morphism const& g) {
      std::size_t total = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (Letter b : g.image_at(i)) {
          total = saturating_add(total, h.image(b).size());
        }
      }
      return total;
    }

  }  // namespace

  LetterSet mortal_set(Morphism const& h) {
    auto      flags = mortal_flags(h);
    LetterSet result;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (flags[i]) {
        result.insert(h.domain()[i]);
      }
    }
    return result;
  }

  bool is_mortal(Morphism const& h, Str const& x) {
    auto flags = mortal_flags(h);
    return std::all_of(
        x.begin(), x.end(), [&](Letter a) { return flags[h.index_of(a)]; });
  }

  bool is_recursive(Morphism const& h, Letter c) {
    auto i = h.index_of(c);
    return recursive_flags(h)[i];
  }

  std::vector<bool> bounded_letters(Morphism const& h) {
    auto const        mortal = mortal_flags(h);
    std::vector<bool> alive(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      alive[i] = !mortal[i];
    }
    // Occurrence graph of h with the mortal letters erased; on the surviving
    // letters this morphism is non-erasing.
    auto        g = occurrence_graph(h, alive);
    Tarjan      scc(g);
    auto const& comp = scc.component();

    std::vector<bool> growing(h.size(), false);  // indexed by component id
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!alive[i]) {
        continue;
      }
      auto inside = std::count_if(g[i].begin(), g[i].end(), [&](auto j) {
        return comp[j] == comp[i];
      });
      if (inside > 0 && g[i].size() >= 2) {
        growing[comp[i]] = true;
      }
    }

    // A letter is unbounded iff it reaches a growing component.
    Graph reverse(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (auto j : g[i]) {
        reverse[j].push_back(i);
      }
    }
    std::vector<bool>        unbounded(h.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (alive[i] && growing[comp[i]]) {
        unbounded[i] = true;
        stack.push_back(i);
      }
    }
    while (!stack.empty()) {
      auto j = stack.back();
      stack.pop_back();
      for (auto i : reverse[j]) {
        if (!unbounded[i]) {
          unbounded[i] = true;
          stack.push_back(i);
        }
      }
    }
    std::vector<bool> bounded(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      bounded[i] = !unbounded[i];
    }
    return bounded;
  }

  bool is_bounded(Morphism const& h, Letter c) {
    auto i = h.index_of(c);
    return bounded_letters(h)[i];
  }

  ////////////////////////////////////////////////////////////////////////
  // RankTable
  ////////////////////////////////////////////////////////////////////////

  LetterRank const& RankTable::operator[](Letter a) const {
    auto it = _index.find(a);
    if (it == _index.end()) {
      throw UnknownLetter("letter " + std::string(a.name())
                          + " is not in the rank table");
    }
    return _entries[it->second];
  }

  std::optional<std::size_t> RankTable::max_rank() const {
    std::optional<std::size_t> result;
    for (auto const& e : _entries) {
      if (e.rank && (!result || *e.rank > *result)) {
        result = e.rank;
      }
    }
    return result;
  }

  RankTable rank_table(Morphism const& h) {
    RankTable table;
    table._letters = h.domain();
    table._entries.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      table._index.emplace(h.domain()[i], i);
    }

    auto const mortal    = mortal_flags(h);
    auto const recursive = recursive_flags(h);
    for (std::size_t i = 0; i < h.size(); ++i) {
      table._entries[i].mortal    = mortal[i];
      table._entries[i].recursive = recursive[i];
    }

    auto        stage_morphism = h;
    std::size_t unranked       = h.size();
    for (std::size_t stage = 0; unranked > 0; ++stage) {
      if (stage > 0) {
        LetterSet remaining;
        for (std::size_t i = 0; i < h.size(); ++i) {
          if (!table._entries[i].rank) {
            remaining.insert(h.domain()[i]);
          }
        }
        stage_morphism = erase_except(h, remaining);
      }
      auto const  bounded  = bounded_letters(stage_morphism);
      std::size_t assigned = 0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!table._entries[i].rank && bounded[i]) {
          table._entries[i].rank = stage;
          ++assigned;
        }
      }
      if (assigned == 0) {
        break;
      }
      unranked -= assigned;
    }

    for (auto& e : table._entries) {
      if (!e.rank) {
        continue;
      }
      if (e.mortal) {
        e.level = 0;
      } else if (e.recursive) {
        e.level = 2 * *e.rank + 1;
      } else {
        e.level = 2 * *e.rank + 2;
      }
    }
    return table;
  }

  namespace {
    template <typename Field>
    std::optional<std::size_t> max_over(RankTable const& table,
                                        Str const&       x,
                                        Field            field) {
      if (x.empty()) {
        throw EmptyString("rank and level are undefined for the empty string");
      }
      std::size_t result = 0;
      for (Letter a : x) {
        auto value = field(table[a]);
        if (!value) {
          return std::nullopt;
        }
        result = std::max(result, *value);
      }
      return result;
    }
  }  // namespace

  std::optional<std::size_t> rank_of(RankTable const& table, Str const& x) {
    return max_over(table, x, [](LetterRank const& e) { return e.rank; });
  }

  std::optional<std::size_t> level_of(RankTable const& table, Str const& x) {
    return max_over(table, x, [](LetterRank const& e) { return e.level; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalization
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t default_max_power(std::size_t alphabet_size) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  lcm  = 1;
    for (std::uint64_t k = 2; k <= alphabet_size; ++k) {
      auto step = k / std::gcd(lcm, k);
      if (lcm > kMax / step) {
        return kMax;
      }
      lcm *= step;
    }
    for (std::size_t k = 0; k < alphabet_size; ++k) {
      if (lcm > kMax / 2) {
        return kMax;
      }
      lcm *= 2;
    }
    return lcm;
  }

  namespace {
    bool normalized_with(Morphism const& g,
                         Morphism const& g2,
                         RankTable const& ranks) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto const& once  = g.image_at(i);
        auto const& twice = g2.image_at(i);
        if (once.alphabet() != twice.alphabet()) {
          return false;
        }
        if (ranks[g.domain()[i]].rank == 0u && once != twice) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_normalized(Morphism const& g) {
    return normalized_with(g, compose(g, g), rank_table(g));
  }

  NormalizedMorphism normalize(Morphism const& h,
                               NormalizeOptions const& options) {
    auto const max_power = options.max_power.value_or(default_max_power(h.size()));
    auto       g         = h;
    for (std::uint64_t t = 1; t <= max_power; ++t) {
      if (composed_size(g, g) > options.image_size_limit) {
        throw NormalizationNotFound(
            "normalization gave up at power " + std::to_string(t)
            + ": images exceed the size limit of "
            + std::to_string(options.image_size_limit) + " letters");
      }
      auto g2    = compose(g, g);
      auto ranks = rank_table(g);
      if (normalized_with(g, g2, ranks)) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          auto const& e = ranks[g.domain()[i]];
          if (e.mortal && !g.image_at(i).empty()) {
            throw InternalConstructionError(
                "normalized power maps a mortal letter to a nonempty string");
          }
          if (e.recursive && !g.image_at(i).contains(g.domain()[i])) {
            throw InternalConstructionError(
                "normalized power loses a recursive letter from its image");
          }
        }
        return NormalizedMorphism{std::move(g),
                                  static_cast<std::size_t>(t),
                                  h,
                                  std::move(ranks)};
      }
      if (t == max_power) {
        break;
      }
      if (composed_size(h, g) > options.image_size_limit) {
        throw NormalizationNotFound(
            "normalization gave up at power " + std::to_string(t + 1)
            + ": images exceed the size limit");
      }
      g = compose(h, g);
    }
    throw NormalizationNotFound("no normalized power h^t with t <= "
                                + std::to_string(max_power));
  }

  GrowthExponent growth_exponent(Morphism const& h, Str const& x) {
    if (x.empty()) {
      throw EmptyString("growth is undefined for the empty string");
    }
    auto table = rank_table(h);
    if (std::all_of(x.begin(), x.end(), [&](Letter a) { return table.mortal(a); })) {
      return GrowthExponent{0, true};
    }
    return GrowthExponent{rank_of(table, x), false};
  }

}  // namespace morphic

#include "morphic/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "morphic/analysis.hpp"
#include "morphic/errors.hpp"

namespace morphic {

  Morphism::Morphism(std::vector<Rule> rules) {
    _domain.reserve(rules.size());
    _images.reserve(rules.size());
    for (auto& [a, image] : rules) {
      if (!_index.emplace(a, _domain.size()).second) {
        throw InvalidArgument("duplicate rule for letter "
                              + std::string(a.name()));
      }
      _domain.push_back(a);
      _images.push_back(std::move(image));
    }
    for (std::size_t i = 0; i < _domain.size(); ++i) {
      for (Letter b : _images[i]) {
        if (!contains(b)) {
          throw InvalidArgument("image of " + std::string(_domain[i].name())
                                + " uses letter " + std::string(b.name())
                                + " which has no rule");
        }
      }
    }
  }

  Morphism Morphism::identity(std::vector<Letter> const& letters) {
    std::vector<Rule> rules;
    LetterSet         seen;
    for (Letter a : letters) {
      if (seen.insert(a).second) {
        rules.emplace_back(a, Str{a});
      }
    }
    return Morphism(std::move(rules));
  }

  std::size_t Morphism::index_of(Letter a) const {
    auto it = _index.find(a);
    if (it == _index.end()) {
      throw UnknownLetter("letter " + std::string(a.name())
                          + " is not in the domain of the morphism");
    }
    return it->second;
  }

  std::vector<Morphism::Rule> Morphism::rules() const {
    std::vector<Rule> result;
    result.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      result.emplace_back(_domain[i], _images[i]);
    }
    return result;
  }

  std::size_t Morphism::total_image_size() const {
    return std::accumulate(
        _images.begin(), _images.end(), std::size_t(0),
        [](std::size_t acc, Str const& x) { return acc + x.size(); });
  }

  bool Morphism::is_coding() const {
    return std::all_of(_images.begin(), _images.end(),
                       [](Str const& x) { return x.size() == 1; });
  }

  bool operator==(Morphism const& lhs, Morphism const& rhs) {
    if (lhs.size() != rhs.size()) {
      return false;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      Letter a = lhs._domain[i];
      if (!rhs.contains(a) || rhs.image(a) != lhs._images[i]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coding
  ////////////////////////////////////////////////////////////////////////

  Coding::Coding(std::vector<std::pair<Letter, Letter>> const& map) {
    std::vector<Morphism::Rule> rules;
    LetterSet                   sources;
    for (auto [from, to] : map) {
      if (!sources.insert(from).second) {
        throw InvalidArgument("duplicate coding entry for letter "
                              + std::string(from.name()));
      }
      rules.emplace_back(from, Str{to});
    }
    for (auto [from, to] : map) {
      if (sources.insert(to).second) {
        rules.emplace_back(to, Str{to});
      }
    }
    _morphism = Morphism(std::move(rules));
  }

  Coding Coding::identity(std::vector<Letter> const& letters) {
    return Coding(Morphism::identity(letters));
  }

  Letter Coding::operator()(Letter a) const {
    return _morphism.image(a).front();
  }

  Str Coding::operator()(Str const& x) const {
    return apply(_morphism, x);
  }

  Coding Coding::extended(std::vector<Letter> const& letters) const {
    auto      rules = _morphism.rules();
    LetterSet seen;
    for (auto const& rule : rules) {
      seen.insert(rule.first);
    }
    for (Letter a : letters) {
      if (seen.insert(a).second) {
        rules.emplace_back(a, Str{a});
      }
    }
    return Coding(Morphism(std::move(rules)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Str apply(Morphism const& h, Str const& x) {
    std::vector<Letter> out;
    std::size_t         n = 0;
    for (Letter a : x) {
      n += h.image(a).size();
    }
    out.reserve(n);
    for (Letter a : x) {
      auto const& img = h.image(a);
      out.insert(out.end(), img.begin(), img.end());
    }
    return Str(std::move(out));
  }

  Str iterate(Morphism const& h, Str x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      x = apply(h, x);
    }
    return x;
  }

  Morphism erase_except(Morphism const& h, LetterSet const& keep) {
    std::vector<Morphism::Rule> rules;
    rules.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::vector<Letter> kept;
      for (Letter b : h.image_at(i)) {
        if (keep.contains(b)) {
          kept.push_back(b);
        }
      }
      rules.emplace_back(h.domain()[i], Str(std::move(kept)));
    }
    return Morphism(std::move(rules));
  }

  Morphism restrict_to_reachable(Morphism const& h, Str const& start) {
    std::vector<bool>        seen(h.size(), false);
    std::vector<std::size_t> stack;
    for (Letter a : start) {
      auto i = h.index_of(a);
      if (!seen[i]) {
        seen[i] = true;
        stack.push_back(i);
      }
    }
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (Letter b : h.image_at(i)) {
        auto j = h.index_of(b);
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::vector<Morphism::Rule> rules;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (seen[i]) {
        rules.emplace_back(h.domain()[i], h.image_at(i));
      }
    }
    return Morphism(std::move(rules));
  }

  Morphism compose(Morphism const& h, Morphism const& g) {
    std::vector<Morphism::Rule> rules;
    rules.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      rules.emplace_back(g.domain()[i], apply(h, g.image_at(i)));
    }
    return Morphism(std::move(rules));
  }

  bool is_prolongable(Morphism const& h, Letter c) {
    auto const& img = h.image(c);
    if (img.empty() || img.front() != c) {
      return false;
    }
    auto mortal = mortal_set(h);
    return std::any_of(img.begin() + 1, img.end(),
                       [&](Letter a) { return !mortal.contains(a); });
  }

  ////////////////////////////////////////////////////////////////////////
  // MorphicSpec
  ////////////////////////////////////////////////////////////////////////

  MorphicSpec::MorphicSpec(Morphism h, Letter start, Coding tau)
      : _h(std::move(h)), _start(start), _tau(tau.extended(_h.domain())) {
    if (!_h.contains(start)) {
      throw InvalidArgument("start letter " + std::string(start.name())
                            + " has no rule");
    }
    if (!is_prolongable(_h, start)) {
      throw InvalidArgument("the morphism is not prolongable on "
                            + std::string(start.name()));
    }
  }

  MorphicSpec::MorphicSpec(Morphism h, Letter start)
      : MorphicSpec(std::move(h), start, Coding()) {}

  Str MorphicSpec::tail() const {
    return _h.image(_start).substr(1);
  }

}  // namespace morphic

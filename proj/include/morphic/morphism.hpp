// Morphisms, codings and morphic representations.

#ifndef MORPHIC_MORPHISM_HPP_
#define MORPHIC_MORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphic/letter.hpp"

namespace morphic {

  //! A morphism on a finite alphabet, given by its letter images.
  //!
  //! The domain keeps the order in which the rules were supplied; that order
  //! is what gets printed, so identical inputs give identical output. Every
  //! domain letter has exactly one image and every letter of every image is
  //! itself in the domain.
  class Morphism {
   public:
    using Rule = std::pair<Letter, Str>;

    Morphism() = default;

    //! Throws InvalidArgument on a duplicate rule or an image letter that has
    //! no rule of its own.
    explicit Morphism(std::vector<Rule> rules);

    //! The identity on \p letters (duplicates are ignored).
    static Morphism identity(std::vector<Letter> const& letters);

    [[nodiscard]] std::vector<Letter> const& domain() const noexcept {
      return _domain;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _domain.size();
    }
    [[nodiscard]] bool contains(Letter a) const {
      return _index.contains(a);
    }
    //! Position of \p a in domain(); throws UnknownLetter.
    [[nodiscard]] std::size_t index_of(Letter a) const;

    //! h(a); throws UnknownLetter.
    [[nodiscard]] Str const& image(Letter a) const {
      return _images[index_of(a)];
    }
    [[nodiscard]] Str const& image_at(std::size_t i) const {
      return _images[i];
    }

    [[nodiscard]] std::vector<Rule> rules() const;

    //! Sum of image lengths.
    [[nodiscard]] std::size_t total_image_size() const;

    [[nodiscard]] bool is_coding() const;

    //! Equal as maps, independent of rule order.
    friend bool operator==(Morphism const& lhs, Morphism const& rhs);

   private:
    std::vector<Letter>                     _domain;
    std::vector<Str>                        _images;
    std::unordered_map<Letter, std::size_t> _index;
  };

  //! A letter-to-letter morphism.
  //!
  //! Letters that only occur as targets are added to the domain with the
  //! identity image, which keeps the underlying morphism closed.
  class Coding {
   public:
    Coding() = default;
    explicit Coding(std::vector<std::pair<Letter, Letter>> const& map);

    //! The identity coding on \p letters.
    static Coding identity(std::vector<Letter> const& letters);

    [[nodiscard]] Letter operator()(Letter a) const;
    [[nodiscard]] Str    operator()(Str const& x) const;

    [[nodiscard]] bool contains(Letter a) const {
      return _morphism.contains(a);
    }
    [[nodiscard]] Morphism const& morphism() const noexcept {
      return _morphism;
    }

    //! Copy extended with the identity on letters of \p letters that are not
    //! yet mapped.
    [[nodiscard]] Coding extended(std::vector<Letter> const& letters) const;

    friend bool operator==(Coding const&, Coding const&) = default;

   private:
    explicit Coding(Morphism m) : _morphism(std::move(m)) {}
    Morphism _morphism;
  };

  //! h(x). Throws UnknownLetter if a letter of x is outside the domain.
  Str apply(Morphism const& h, Str const& x);

  //! h^n(x).
  Str iterate(Morphism const& h, Str x, std::size_t n);

  //! phi(h, B): every image with the letters outside \p keep removed.
  Morphism erase_except(Morphism const& h, LetterSet const& keep);

  //! h restricted to the letters reachable from \p start (including start).
  Morphism restrict_to_reachable(Morphism const& h, Str const& start);

  //! compose(h, g)(a) = h(g(a)); the domains must agree.
  Morphism compose(Morphism const& h, Morphism const& g);

  bool is_prolongable(Morphism const& h, Letter c);

  //! A representation (h, c, tau) of the infinite word tau(h^omega(c)).
  class MorphicSpec {
   public:
    //! Throws InvalidArgument unless c is in the domain of h and h is
    //! prolongable on c. Domain letters that tau does not map are mapped to
    //! themselves.
    MorphicSpec(Morphism h, Letter start, Coding tau);
    MorphicSpec(Morphism h, Letter start);

    [[nodiscard]] Morphism const& morphism() const noexcept {
      return _h;
    }
    [[nodiscard]] Letter start() const noexcept {
      return _start;
    }
    [[nodiscard]] Coding const& coding() const noexcept {
      return _tau;
    }
    //! The string x with h(c) = c x.
    [[nodiscard]] Str tail() const;

   private:
    Morphism _h;
    Letter   _start;
    Coding   _tau;
  };

}  // namespace morphic

#endif  // MORPHIC_MORPHISM_HPP_

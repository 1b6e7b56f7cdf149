// Structural analysis of a morphism: mortality, recursion, boundedness, the
// Ehrenfeucht-Rozenberg rank of letters, levels, normalized powers and growth
// degrees.

#ifndef MORPHIC_ANALYSIS_HPP_
#define MORPHIC_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "morphic/letter.hpp"
#include "morphic/morphism.hpp"

namespace morphic {

  //! Letters c with h^m(c) = lambda for some m.
  LetterSet mortal_set(Morphism const& h);

  //! True if x is mortal under h (every letter mortal; lambda is mortal).
  bool is_mortal(Morphism const& h, Str const& x);

  //! True if c occurs in h^i(c) for some i >= 1.
  bool is_recursive(Morphism const& h, Letter c);

  //! True if {h^i(c) | i >= 0} is finite.
  //!
  //! Over a finite alphabet the sequence h^i(c) is deterministic, so bounded
  //! lengths force it to be eventually periodic, i.e. finite. The test used
  //! is therefore on lengths: drop mortal letters, and c is unbounded iff it
  //! reaches a cyclic strongly connected component in which some letter's
  //! image holds a letter of the component plus at least one more letter.
  bool is_bounded(Morphism const& h, Letter c);

  //! is_bounded for every domain letter, indexed like h.domain().
  std::vector<bool> bounded_letters(Morphism const& h);

  struct LetterRank {
    bool                       mortal    = false;
    bool                       recursive = false;
    std::optional<std::size_t> rank;
    std::optional<std::size_t> level;

    friend bool operator==(LetterRank const&, LetterRank const&) = default;
  };

  //! Rank and level of every domain letter of a morphism.
  class RankTable {
   public:
    RankTable() = default;

    [[nodiscard]] LetterRank const& operator[](Letter a) const;
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] std::optional<std::size_t> rank(Letter a) const {
      return (*this)[a].rank;
    }
    [[nodiscard]] std::optional<std::size_t> level(Letter a) const {
      return (*this)[a].level;
    }
    [[nodiscard]] bool mortal(Letter a) const {
      return (*this)[a].mortal;
    }

    //! Largest rank that occurs, or nullopt if the table is empty.
    [[nodiscard]] std::optional<std::size_t> max_rank() const;

   private:
    friend RankTable rank_table(Morphism const&);

    std::vector<Letter>                     _letters;
    std::vector<LetterRank>                 _entries;
    std::unordered_map<Letter, std::size_t> _index;
  };

  //! Stage-wise rank computation: stage 0 ranks the letters bounded under h,
  //! stage n ranks the letters still unranked that are bounded once every
  //! ranked letter is erased from the images. Stops at the first empty stage.
  RankTable rank_table(Morphism const& h);

  //! max rank over the letters of x; nullopt if some letter has no rank.
  //! Throws EmptyString for lambda.
  std::optional<std::size_t> rank_of(RankTable const& table, Str const& x);

  //! max level over the letters of x; nullopt if some letter has no level.
  //! Throws EmptyString for lambda.
  std::optional<std::size_t> level_of(RankTable const& table, Str const& x);

  //! A power g = h^t satisfying alp(g(c)) = alp(g^2(c)) for every letter and
  //! g(c) = g^2(c) for every letter of rank 0.
  struct NormalizedMorphism {
    Morphism    g;
    std::size_t t = 1;
    Morphism    base;
    RankTable   ranks;  // of g
  };

  struct NormalizeOptions {
    //! Largest power tried; nullopt means lcm(1..|A|) * 2^|A| (saturating).
    std::optional<std::uint64_t> max_power;
    //! Abort when g^2 would need more letters than this in total.
    std::size_t image_size_limit = 50'000'000;
  };

  //! Default cap lcm(1..n) * 2^n, saturated at the uint64 maximum.
  std::uint64_t default_max_power(std::size_t alphabet_size);

  //! True if g satisfies both normalization properties.
  bool is_normalized(Morphism const& g);

  //! Smallest normalized power of h. Throws NormalizationNotFound if the cap
  //! or the image-size limit is reached first.
  NormalizedMorphism normalize(Morphism const& h,
                               NormalizeOptions const& options = {});

  //! Theta-degree of |h^n(x)|.
  struct GrowthExponent {
    //! nullopt when x is not polynomially bounded.
    std::optional<std::size_t> degree;
    //! x is mortal; degree is reported as 0.
    bool mortal = false;

    [[nodiscard]] bool exponential() const noexcept {
      return !degree.has_value();
    }
  };

  //! Throws EmptyString for lambda and UnknownLetter for letters outside the
  //! domain.
  GrowthExponent growth_exponent(Morphism const& h, Str const& x);

}  // namespace morphic

#endif  // MORPHIC_ANALYSIS_HPP_

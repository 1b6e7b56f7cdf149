// Conversions between morphic, zigzag, ultimately periodic and multilinear
// representations of infinite words.
//
// zigzag -> morphic builds, for a list l, a seed w with morphism h and coding
// tau such that tau(h^n(w)) = R(l, n+1), then wraps it in a prolongable start
// letter. morphic -> zigzag normalizes the morphism and unfolds the tail of
// the start letter's image level by level into nested F/B/S terms.

#ifndef MORPHIC_TRANSFORMS_HPP_
#define MORPHIC_TRANSFORMS_HPP_

#include <cstddef>
#include <vector>

#include "morphic/analysis.hpp"
#include "morphic/letter.hpp"
#include "morphic/morphism.hpp"
#include "morphic/zigzag.hpp"

namespace morphic {

  //! q (r_1^{a_1 n + b_1} ... r_m^{a_m n + b_m}) for n = 0, 1, 2, ...
  class MultilinearSpec {
   public:
    struct Term {
      Str         base;
      std::size_t slope  = 0;  // a
      std::size_t offset = 0;  // b

      friend bool operator==(Term const&, Term const&) = default;
    };

    //! Throws InvalidArgument on an empty term list, an empty base or a term
    //! with a + b = 0.
    MultilinearSpec(Str prefix, std::vector<Term> terms);

    [[nodiscard]] Str const& prefix() const noexcept {
      return _prefix;
    }
    [[nodiscard]] std::vector<Term> const& terms() const noexcept {
      return _terms;
    }
    //! The n-th block, n >= 0.
    [[nodiscard]] Str block(std::size_t n) const;

    friend bool operator==(MultilinearSpec const&, MultilinearSpec const&)
        = default;

   private:
    Str               _prefix;
    std::vector<Term> _terms;
  };

  //! q r^omega.
  class PeriodicSpec {
   public:
    //! Throws InvalidArgument when the period is empty.
    PeriodicSpec(Str prefix, Str period);

    [[nodiscard]] Str const& prefix() const noexcept {
      return _prefix;
    }
    [[nodiscard]] Str const& period() const noexcept {
      return _period;
    }

    friend bool operator==(PeriodicSpec const&, PeriodicSpec const&) = default;

   private:
    Str _prefix;
    Str _period;
  };

  struct TransformOptions {
    //! Construction self-checks compare this many iterates/blocks.
    std::size_t check_iterations = 8;
    NormalizeOptions normalize;
  };

  //! (w, h, tau) with tau(h^n(w)) = R(l, n+1) for all n >= 0.
  struct ListMorphism {
    Str      seed;
    Morphism morphism;
    Coding   coding;
  };

  //! Builds ListMorphism for \p l. Letters of S payloads are reused as long as
  //! they do not clash with letters of earlier terms; every other letter is
  //! fresh, named `<glyph>_<k>` with a counter local to this call and
  //! skipping the names in \p reserved. Self-checks the identity for
  //! n < options.check_iterations and throws InternalConstructionError on a
  //! mismatch.
  ListMorphism list_to_morphism(ZigzagList const&       l,
                                std::vector<Letter> const& reserved = {},
                                TransformOptions const& options = {});

  //! A morphic representation of the zigzag word whose start letter has rank
  //! depth(spec.list).
  MorphicSpec zigzag_to_morphic(ZigzagSpec const&       spec,
                                TransformOptions const& options = {});

  //! A list l of depth rank(x) + 1 with R(l, i) = g^{v+i}(x) for i >= 1.
  //!
  //! Requires x nonempty and ranked under g, level(x) > 0 and v >= level(x);
  //! throws PreconditionViolation otherwise. Self-checks the identity for
  //! i <= options.check_iterations.
  ZigzagList build_list(NormalizedMorphism const& g,
                        Str const&                x,
                        std::size_t               v,
                        TransformOptions const&   options = {});

  //! Throws ExponentialGrowth if the start letter has no rank.
  ZigzagSpec morphic_to_zigzag(MorphicSpec const&      spec,
                               TransformOptions const& options = {});

  //! Throws DepthMismatch unless depth(spec.list) == 1.
  PeriodicSpec zigzag_to_periodic(ZigzagSpec const& spec);
  ZigzagSpec   periodic_to_zigzag(PeriodicSpec const& p);

  ZigzagSpec multilinear_to_zigzag(MultilinearSpec const& m);
  //! Throws DepthMismatch if depth(spec.list) > 2.
  MultilinearSpec zigzag_to_multilinear(ZigzagSpec const& spec);

}  // namespace morphic

#endif  // MORPHIC_TRANSFORMS_HPP_

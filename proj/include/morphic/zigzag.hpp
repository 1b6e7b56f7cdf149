// Zigzag representations q R(l,1) R(l,2) ... of infinite words.
//
// A list l is a nonempty sequence of terms. A term is either static (S) with
// a nonempty string payload, or forward (F) / backward (B) over a nested
// list. Block i of a list is
//
//   R(l, i)    = term_1(i) term_2(i) ... term_m(i)
//   S(x)(i)    = x
//   F(l')(i)   = R(l',1) R(l',2) ... R(l',i)
//   B(l')(i)   = R(l',i) ... R(l',2) R(l',1)

#ifndef MORPHIC_ZIGZAG_HPP_
#define MORPHIC_ZIGZAG_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/letter.hpp"

namespace morphic {

  enum class TermKind { forward, backward, stasis };

  char to_char(TermKind kind) noexcept;

  class ZigzagTerm;

  //! A nonempty list of zigzag terms.
  class ZigzagList {
   public:
    //! Throws InvalidArgument when \p terms is empty.
    explicit ZigzagList(std::vector<ZigzagTerm> terms);

    [[nodiscard]] std::vector<ZigzagTerm> const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }
    [[nodiscard]] auto begin() const noexcept {
      return _terms.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _terms.end();
    }

    friend bool operator==(ZigzagList const&, ZigzagList const&);

   private:
    std::vector<ZigzagTerm> _terms;
  };

  class ZigzagTerm {
   public:
    //! Throws InvalidArgument when \p payload is empty.
    static ZigzagTerm stasis(Str payload);
    static ZigzagTerm forward(ZigzagList sub);
    static ZigzagTerm backward(ZigzagList sub);

    [[nodiscard]] TermKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] bool is_stasis() const noexcept {
      return _kind == TermKind::stasis;
    }
    //! Only meaningful for S terms.
    [[nodiscard]] Str const& payload() const noexcept {
      return _payload;
    }
    //! Only meaningful for F and B terms.
    [[nodiscard]] ZigzagList const& sublist() const;

    friend bool operator==(ZigzagTerm const&, ZigzagTerm const&);

   private:
    ZigzagTerm(TermKind kind, Str payload, std::vector<ZigzagList> sub)
        : _kind(kind), _payload(std::move(payload)), _sub(std::move(sub)) {}

    TermKind _kind;
    Str      _payload;
    // Holds exactly one list for F/B terms and none for S terms.
    std::vector<ZigzagList> _sub;
  };

  //! The word q R(l,1) R(l,2) ...; always infinite.
  struct ZigzagSpec {
    Str        prefix;
    ZigzagList list;

    friend bool operator==(ZigzagSpec const&, ZigzagSpec const&) = default;
  };

  //! R(l, i) for i >= 1. Throws InvalidArgument for i == 0.
  Str block(ZigzagList const& l, std::size_t i);
  //! F(l, n) = R(l,1) ... R(l,n).
  Str forward_product(ZigzagList const& l, std::size_t n);
  //! B(l, n) = R(l,n) ... R(l,1).
  Str backward_product(ZigzagList const& l, std::size_t n);

  //! Nesting depth: 1 for a list of S terms, 1 + the deepest sublist otherwise.
  std::size_t depth(ZigzagList const& l);

  //! Letters occurring anywhere in the spec (prefix and payloads), first
  //! occurrence order.
  std::vector<Letter> letters_of(ZigzagSpec const& spec);

  //! The list with \p f applied to every S payload.
  template <typename Function>
  ZigzagList map_payloads(ZigzagList const& l, Function&& f);

  //! First n letters, produced block by block.
  Str expand(ZigzagSpec const& spec, std::size_t n);

  //! Parses the shorthand notation `[prefix ":"] items`. Throws ParseError.
  ZigzagSpec parse_shorthand(std::string_view text);

  //! Canonical shorthand. Depth-1 F/B terms print as "( ... )"; deeper ones
  //! as "F( ... )" or "B( ... )"; no whitespace except the single space that
  //! keeps a letter F or B from fusing with a following "(".
  std::string print_shorthand(ZigzagSpec const& spec);
  std::string print_shorthand(ZigzagList const& l);

  ////////////////////////////////////////////////////////////////////////
  // Implementation details
  ////////////////////////////////////////////////////////////////////////

  template <typename Function>
  ZigzagList map_payloads(ZigzagList const& l, Function&& f) {
    std::vector<ZigzagTerm> terms;
    terms.reserve(l.size());
    for (auto const& term : l) {
      switch (term.kind()) {
        case TermKind::stasis:
          terms.push_back(ZigzagTerm::stasis(f(term.payload())));
          break;
        case TermKind::forward:
          terms.push_back(ZigzagTerm::forward(map_payloads(term.sublist(), f)));
          break;
        case TermKind::backward:
          terms.push_back(
              ZigzagTerm::backward(map_payloads(term.sublist(), f)));
          break;
      }
    }
    return ZigzagList(std::move(terms));
  }

}  // namespace morphic

#endif  // MORPHIC_ZIGZAG_HPP_

#include "morphic/zigzag.hpp"

#include <algorithm>

#include "morphic/errors.hpp"

namespace morphic {

  char to_char(TermKind kind) noexcept {
    switch (kind) {
      case TermKind::forward:
        return 'F';
      case TermKind::backward:
        return 'B';
      case TermKind::stasis:
        return 'S';
    }
    return '?';
  }

  ZigzagList::ZigzagList(std::vector<ZigzagTerm> terms)
      : _terms(std::move(terms)) {
    if (_terms.empty()) {
      throw InvalidArgument("zigzag lists must be nonempty");
    }
  }

  bool operator==(ZigzagList const& lhs, ZigzagList const& rhs) {
    return lhs._terms == rhs._terms;
  }

  ZigzagTerm ZigzagTerm::stasis(Str payload) {
    if (payload.empty()) {
      throw InvalidArgument("S terms need a nonempty payload");
    }
    return ZigzagTerm(TermKind::stasis, std::move(payload), {});
  }

  ZigzagTerm ZigzagTerm::forward(ZigzagList sub) {
    return ZigzagTerm(TermKind::forward, Str(), {std::move(sub)});
  }

  ZigzagTerm ZigzagTerm::backward(ZigzagList sub) {
    return ZigzagTerm(TermKind::backward, Str(), {std::move(sub)});
  }

  ZigzagList const& ZigzagTerm::sublist() const {
    if (_sub.empty()) {
      throw InvalidArgument("S terms have no sublist");
    }
    return _sub.front();
  }

  bool operator==(ZigzagTerm const& lhs, ZigzagTerm const& rhs) {
    return lhs._kind == rhs._kind && lhs._payload == rhs._payload
           && lhs._sub == rhs._sub;
  }

  namespace {
    void append_block(ZigzagList const& l, std::size_t i, Str& out);

    void append_term(ZigzagTerm const& term, std::size_t i, Str& out) {
      switch (term.kind()) {
        case TermKind::stasis:
          out += term.payload();
          break;
        case TermKind::forward:
          for (std::size_t j = 1; j <= i; ++j) {
            append_block(term.sublist(), j, out);
          }
          break;
        case TermKind::backward:
          for (std::size_t j = i; j >= 1; --j) {
            append_block(term.sublist(), j, out);
          }
          break;
      }
    }

    void append_block(ZigzagList const& l, std::size_t i, Str& out) {
      for (auto const& term : l) {
        append_term(term, i, out);
      }
    }

    void require_positive(std::size_t i) {
      if (i == 0) {
        throw InvalidArgument("zigzag blocks are indexed from 1");
      }
    }
  }  // namespace

  Str block(ZigzagList const& l, std::size_t i) {
    require_positive(i);
    Str out;
    append_block(l, i, out);
    return out;
  }

  Str forward_product(ZigzagList const& l, std::size_t n) {
    require_positive(n);
    Str out;
    append_term(ZigzagTerm::forward(l), n, out);
    return out;
  }

  Str backward_product(ZigzagList const& l, std::size_t n) {
    require_positive(n);
    Str out;
    append_term(ZigzagTerm::backward(l), n, out);
    return out;
  }

  std::size_t depth(ZigzagList const& l) {
    std::size_t result = 1;
    for (auto const& term : l) {
      if (!term.is_stasis()) {
        result = std::max(result, depth(term.sublist()) + 1);
      }
    }
    return result;
  }

  namespace {
    void collect(ZigzagList const& l, std::vector<Letter>& out, LetterSet& seen) {
      for (auto const& term : l) {
        if (term.is_stasis()) {
          for (Letter a : term.payload()) {
            if (seen.insert(a).second) {
              out.push_back(a);
            }
          }
        } else {
          collect(term.sublist(), out, seen);
        }
      }
    }
  }  // namespace

  std::vector<Letter> letters_of(ZigzagSpec const& spec) {
    std::vector<Letter> out;
    LetterSet           seen;
    for (Letter a : spec.prefix) {
      if (seen.insert(a).second) {
        out.push_back(a);
      }
    }
    collect(spec.list, out, seen);
    return out;
  }

  Str expand(ZigzagSpec const& spec, std::size_t n) {
    Str out = spec.prefix;
    // every block is nonempty, so this terminates
    for (std::size_t i = 1; out.size() < n; ++i) {
      append_block(spec.list, i, out);
    }
    out.truncate(n);
    return out;
  }

}  // namespace morphic

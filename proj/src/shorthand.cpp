// Shorthand notation for zigzag specs.
//
//   spec   := [ prefix ":" ] items
//   items  := item+                  (whitespace between items is ignored)
//   item   := STRING | "(" items ")" | "F(" items ")" | "B(" items ")"
//   STRING := [a-zA-Z0-9]+
//
// "F" and "B" are ordinary letters except directly before "(", where they
// open a forward or backward group. A bare "( ... )" group must have depth 1
// and is read as a forward term. Adjacent strings separated only by blanks
// form a single S term.

#include <cctype>
#include <string>

#include "morphic/errors.hpp"
#include "morphic/zigzag.hpp"

namespace morphic {

  namespace {
    bool is_letter_char(char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) != 0;
    }

    class ShorthandParser {
     public:
      explicit ShorthandParser(std::string_view text) : _text(text) {}

      ZigzagSpec parse() {
        skip_blanks();
        if (at_end()) {
          throw ParseError(_pos, "a zigzag expression");
        }
        Str  prefix;
        auto terms = items(/*top_level=*/true, &prefix);
        if (!at_end()) {
          throw ParseError(_pos, "end of input (unbalanced ')')");
        }
        return ZigzagSpec{std::move(prefix), ZigzagList(std::move(terms))};
      }

     private:
      [[nodiscard]] bool at_end() const {
        return _pos >= _text.size();
      }
      [[nodiscard]] char peek(std::size_t ahead = 0) const {
        return _pos + ahead < _text.size() ? _text[_pos + ahead] : '\0';
      }
      void skip_blanks() {
        while (!at_end()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      [[nodiscard]] bool at_keyword() const {
        return (peek() == 'F' || peek() == 'B') && peek(1) == '(';
      }

      Str string() {
        Str out;
        while (!at_end() && is_letter_char(peek()) && !at_keyword()) {
          out.push_back(Letter::of(peek()));
          ++_pos;
        }
        return out;
      }

      // Parses items up to end of input (top level) or the closing ')'.
      // At top level a ':' after a single string turns it into the prefix.
      std::vector<ZigzagTerm> items(bool top_level, Str* prefix) {
        std::vector<ZigzagTerm> terms;
        bool                    last_was_string = false;
        bool                    seen_colon      = false;
        while (true) {
          skip_blanks();
          if (at_end() || peek() == ')') {
            break;
          }
          if (at_keyword()) {
            auto kind = peek() == 'F' ? TermKind::forward : TermKind::backward;
            _pos += 2;
            auto sub = group_body();
            terms.push_back(kind == TermKind::forward
                                ? ZigzagTerm::forward(std::move(sub))
                                : ZigzagTerm::backward(std::move(sub)));
            last_was_string = false;
          } else if (peek() == '(') {
            auto const open = _pos;
            ++_pos;
            auto sub = group_body();
            if (depth(sub) > 1) {
              throw ParseError(open,
                               "a depth-1 group inside '( ... )'; write F( ... "
                               ") or B( ... ) for deeper groups");
            }
            terms.push_back(ZigzagTerm::forward(std::move(sub)));
            last_was_string = false;
          } else if (is_letter_char(peek())) {
            auto s = string();
            if (last_was_string) {
              auto merged = terms.back().payload() + s;
              terms.back() = ZigzagTerm::stasis(std::move(merged));
            } else {
              terms.push_back(ZigzagTerm::stasis(std::move(s)));
            }
            last_was_string = true;
          } else if (peek() == ':' && top_level && !seen_colon
                     && (terms.empty()
                         || (terms.size() == 1 && last_was_string))) {
            if (!terms.empty()) {
              *prefix = terms.front().payload();
              terms.clear();
            }
            seen_colon      = true;
            last_was_string = false;
            ++_pos;
          } else {
            throw ParseError(_pos,
                             "a letter [a-zA-Z0-9], '(', 'F(', 'B(' or ')'"
                             + std::string(top_level && !seen_colon
                                               ? " or ':' after the prefix"
                                               : ""));
          }
        }
        if (terms.empty()) {
          throw ParseError(_pos, top_level && seen_colon
                                     ? "at least one item after ':'"
                                     : "at least one item");
        }
        return terms;
      }

      // After an opening "(" / "F(" / "B(": items then ')'.
      ZigzagList group_body() {
        skip_blanks();
        if (peek() == ')') {
          throw ParseError(_pos, "at least one item inside the group");
        }
        auto terms = items(/*top_level=*/false, nullptr);
        if (peek() != ')') {
          throw ParseError(_pos, "')' (unbalanced parentheses)");
        }
        ++_pos;
        return ZigzagList(std::move(terms));
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    class ShorthandPrinter {
     public:
      void list(ZigzagList const& l) {
        for (auto const& term : l) {
          if (term.is_stasis()) {
            for (Letter a : term.payload()) {
              _out += a.name();
            }
          } else if (depth(term.sublist()) == 1) {
            open("(");
            list(term.sublist());
            _out += ')';
          } else {
            open(term.kind() == TermKind::forward ? "F(" : "B(");
            list(term.sublist());
            _out += ')';
          }
        }
      }

      void prefix(Str const& q) {
        if (!q.empty()) {
          _out += q.to_string();
          _out += ':';
        }
      }

      std::string take() {
        return std::move(_out);
      }

     private:
      void open(std::string_view token) {
        // a trailing letter F or B would otherwise read as a keyword
        if (!_out.empty() && (_out.back() == 'F' || _out.back() == 'B')) {
          _out += ' ';
        }
        _out += token;
      }

      std::string _out;
    };
  }  // namespace

  ZigzagSpec parse_shorthand(std::string_view text) {
    return ShorthandParser(text).parse();
  }

  std::string print_shorthand(ZigzagSpec const& spec) {
    ShorthandPrinter printer;
    printer.prefix(spec.prefix);
    printer.list(spec.list);
    return printer.take();
  }

  std::string print_shorthand(ZigzagList const& l) {
    ShorthandPrinter printer;
    printer.list(l);
    return printer.take();
  }

}  // namespace morphic

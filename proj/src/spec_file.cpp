#include "morphic/spec_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace morphic {

  std::string_view to_string(SpecKind kind) noexcept {
    switch (kind) {
      case SpecKind::morphic:
        return "morphic";
      case SpecKind::zigzag:
        return "zigzag";
      case SpecKind::multilinear:
        return "multilinear";
      case SpecKind::periodic:
        return "periodic";
    }
    return "?";
  }

  std::optional<SpecKind> parse_kind(std::string_view name) noexcept {
    for (auto kind : {SpecKind::morphic,
                      SpecKind::zigzag,
                      SpecKind::multilinear,
                      SpecKind::periodic}) {
      if (name == to_string(kind)) {
        return kind;
      }
    }
    return std::nullopt;
  }

  SpecKind kind_of(AnySpec const& spec) noexcept {
    return static_cast<SpecKind>(spec.index());
  }

  SpecFileError::SpecFileError(std::string const& source,
                               std::size_t        line,
                               std::string const& message)
      : Error(line == 0 ? source + ": " + message
                        : source + ":" + std::to_string(line) + ": " + message),
        _line(line) {}

  namespace {
    struct Line {
      std::size_t              number;
      std::string              text;  // comment stripped
      std::vector<std::string> tokens;
    };

    std::vector<Line> split_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        auto raw = std::string(text.substr(pos, end - pos));
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream       in(raw);
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) {
          tokens.push_back(tok);
        }
        if (!tokens.empty()) {
          out.push_back(Line{number, raw, std::move(tokens)});
        }
        pos = end + 1;
      }
      return out;
    }

    bool is_letter_token(std::string_view tok) {
      auto alnum = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) != 0;
      };
      if (tok.size() == 1) {
        return alnum(tok[0]);
      }
      if (tok.size() < 3 || !alnum(tok[0]) || tok[1] != '_') {
        return false;
      }
      for (char ch : tok.substr(2)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          return false;
        }
      }
      return true;
    }

    class Reader {
     public:
      explicit Reader(std::string source) : _source(std::move(source)) {}

      [[noreturn]] void fail(std::size_t line, std::string const& message) const {
        throw SpecFileError(_source, line, message);
      }

      Letter letter(Line const& line, std::string const& tok) const {
        if (!is_letter_token(tok)) {
          fail(line.number, "bad letter \"" + tok + "\"");
        }
        return Letter::named(tok);
      }

      Str string(Line const& line, std::string const& tok) const {
        for (char ch : tok) {
          if (!std::isalnum(static_cast<unsigned char>(ch))) {
            fail(line.number, "bad character '" + std::string(1, ch)
                                  + "' in string \"" + tok + "\"");
          }
        }
        return Str::from_chars(tok);
      }

      std::size_t number(Line const& line, std::string const& tok) const {
        std::size_t value = 0;
        auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          fail(line.number, "expected a nonnegative integer, got \"" + tok + "\"");
        }
        return value;
      }

      MorphicSpec morphic(std::vector<Line> const& lines) const {
        std::optional<std::pair<Letter, std::size_t>> start;
        std::vector<std::pair<Line const*, Morphism::Rule>> rules;
        std::vector<std::pair<Line const*, std::pair<Letter, Letter>>> code;
        std::unordered_map<Letter, std::size_t> rule_line;

        for (auto const& line : lines) {
          auto const& t = line.tokens;
          if (t[0] == "start") {
            if (t.size() != 2) {
              fail(line.number, "expected \"start <letter>\"");
            }
            if (start) {
              fail(line.number, "duplicate start line");
            }
            start.emplace(letter(line, t[1]), line.number);
          } else if (t[0] == "rule") {
            if (t.size() < 3 || t[2] != "->") {
              fail(line.number, "expected \"rule <letter> -> <letter>*\"");
            }
            Letter a = letter(line, t[1]);
            if (!rule_line.emplace(a, line.number).second) {
              fail(line.number, "duplicate rule for " + t[1]);
            }
            Str image;
            for (std::size_t i = 3; i < t.size(); ++i) {
              image.push_back(letter(line, t[i]));
            }
            rules.push_back({&line, {a, std::move(image)}});
          } else if (t[0] == "code") {
            if (t.size() != 4 || t[2] != "->") {
              fail(line.number, "expected \"code <letter> -> <letter>\"");
            }
            code.push_back({&line, {letter(line, t[1]), letter(line, t[3])}});
          } else {
            fail(line.number, "unknown directive \"" + t[0] + "\"");
          }
        }

        std::vector<Morphism::Rule> plain_rules;
        for (auto const& [line, rule] : rules) {
          for (Letter b : rule.second) {
            if (!rule_line.contains(b)) {
              fail(line->number, "unknown letter " + std::string(b.name())
                                     + " in the image of "
                                     + std::string(rule.first.name()));
            }
          }
          plain_rules.push_back(rule);
        }
        std::vector<std::pair<Letter, Letter>> plain_code;
        LetterSet                              coded;
        for (auto const& [line, entry] : code) {
          if (!rule_line.contains(entry.first)) {
            fail(line->number, "code for letter "
                                   + std::string(entry.first.name())
                                   + " which has no rule");
          }
          if (!coded.insert(entry.first).second) {
            fail(line->number, "duplicate code for "
                                   + std::string(entry.first.name()));
          }
          plain_code.push_back(entry);
        }
        if (!start) {
          throw MissingStartLetter(_source + ": no \"start\" line");
        }
        if (!rule_line.contains(start->first)) {
          fail(start->second, "start letter "
                                  + std::string(start->first.name())
                                  + " has no rule");
        }
        Morphism h(std::move(plain_rules));
        if (!is_prolongable(h, start->first)) {
          fail(start->second,
               "the morphism is not prolongable on "
                   + std::string(start->first.name())
                   + " (its image must be the letter followed by a "
                     "non-mortal string)");
        }
        return MorphicSpec(std::move(h), start->first, Coding(plain_code));
      }

      ZigzagSpec zigzag(std::vector<Line> const& lines) const {
        if (lines.size() != 1) {
          fail(lines.size() > 1 ? lines[1].number : 0,
               "a zigzag file holds exactly one shorthand expression");
        }
        try {
          return parse_shorthand(lines.front().text);
        } catch (ParseError const& e) {
          fail(lines.front().number,
               "column " + std::to_string(e.position() + 1) + ": expected "
                   + e.expected());
        } catch (InvalidArgument const& e) {
          fail(lines.front().number, e.what());
        }
      }

      std::pair<Str, std::map<std::string, std::vector<Line const*>>>
      keyed(std::vector<Line> const& lines,
            std::vector<std::string> const& allowed) const {
        std::map<std::string, std::vector<Line const*>> by_key;
        Str                                             prefix;
        bool                                            have_prefix = false;
        for (auto const& line : lines) {
          auto const& key = line.tokens[0];
          if (key == "prefix") {
            if (have_prefix) {
              fail(line.number, "duplicate prefix line");
            }
            if (line.tokens.size() > 2) {
              fail(line.number, "expected \"prefix <string>\"");
            }
            have_prefix = true;
            if (line.tokens.size() == 2) {
              prefix = string(line, line.tokens[1]);
            }
            continue;
          }
          if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(line.number, "unknown directive \"" + key + "\"");
          }
          by_key[key].push_back(&line);
        }
        return {prefix, by_key};
      }

      MultilinearSpec multilinear(std::vector<Line> const& lines) const {
        auto [prefix, by_key] = keyed(lines, {"term"});
        std::vector<MultilinearSpec::Term> terms;
        for (auto const* line : by_key["term"]) {
          auto const& t = line->tokens;
          if (t.size() != 4) {
            fail(line->number, "expected \"term <string> <a> <b>\"");
          }
          MultilinearSpec::Term term{string(*line, t[1]),
                                     number(*line, t[2]),
                                     number(*line, t[3])};
          if (term.slope + term.offset == 0) {
            fail(line->number, "a term needs a + b > 0");
          }
          terms.push_back(std::move(term));
        }
        if (terms.empty()) {
          fail(0, "a multilinear file needs at least one \"term\" line");
        }
        return MultilinearSpec(std::move(prefix), std::move(terms));
      }

      PeriodicSpec periodic(std::vector<Line> const& lines) const {
        auto [prefix, by_key] = keyed(lines, {"period"});
        auto const& periods   = by_key["period"];
        if (periods.empty()) {
          fail(0, "a periodic file needs a \"period\" line");
        }
        if (periods.size() > 1) {
          fail(periods[1]->number, "duplicate period line");
        }
        auto const* line = periods.front();
        if (line->tokens.size() != 2) {
          fail(line->number, "expected \"period <string>\"");
        }
        return PeriodicSpec(std::move(prefix), string(*line, line->tokens[1]));
      }

     private:
      std::string _source;
    };

    std::optional<SpecKind> sniff(std::vector<Line> const& lines) {
      if (lines.empty()) {
        return std::nullopt;
      }
      auto directive = [](Line const& line) -> std::string {
        return line.tokens.size() >= 2 ? line.tokens[0] : std::string();
      };
      auto first = directive(lines.front());
      if (first == "start" || first == "rule" || first == "code") {
        return SpecKind::morphic;
      }
      if (first == "term") {
        return SpecKind::multilinear;
      }
      if (first == "period") {
        return SpecKind::periodic;
      }
      if (first == "prefix") {
        for (auto const& line : lines) {
          if (line.tokens[0] == "term") {
            return SpecKind::multilinear;
          }
          if (line.tokens[0] == "period") {
            return SpecKind::periodic;
          }
        }
        return std::nullopt;
      }
      return SpecKind::zigzag;
    }
  }  // namespace

  SpecFile parse_spec_file(std::string_view        text,
                           std::string const&      source,
                           std::optional<SpecKind> kind) {
    auto const lines = split_lines(text);
    if (lines.empty()) {
      throw SpecFileError(source, 0, "empty spec file");
    }
    if (!kind) {
      kind = sniff(lines);
    }
    if (!kind) {
      throw SpecFileError(source, 0, "cannot tell which kind of spec this is");
    }
    Reader reader(source);
    switch (*kind) {
      case SpecKind::morphic:
        return SpecFile{*kind, reader.morphic(lines), source};
      case SpecKind::zigzag:
        return SpecFile{*kind, reader.zigzag(lines), source};
      case SpecKind::multilinear:
        return SpecFile{*kind, reader.multilinear(lines), source};
      case SpecKind::periodic:
        return SpecFile{*kind, reader.periodic(lines), source};
    }
    throw SpecFileError(source, 0, "unknown spec kind");
  }

  SpecFile load_spec_file(std::string const&      path,
                          std::optional<SpecKind> kind) {
    std::ifstream in(path);
    if (!in) {
      throw SpecFileError(path, 0, "cannot open file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (!kind) {
      if (auto dot = path.rfind('.'); dot != std::string::npos) {
        kind = parse_kind(std::string_view(path).substr(dot + 1));
      }
    }
    return parse_spec_file(text.str(), path, kind);
  }

  namespace {
    void write_morphic(std::ostream& out, MorphicSpec const& spec) {
      auto const& h   = spec.morphism();
      auto const& tau = spec.coding();
      out << "start " << spec.start() << '\n';
      for (auto const& [a, image] : h.rules()) {
        out << "rule " << a << " ->";
        for (Letter b : image) {
          out << ' ' << b;
        }
        out << '\n';
      }
      for (Letter a : h.domain()) {
        if (tau(a) != a) {
          out << "code " << a << " -> " << tau(a) << '\n';
        }
      }
    }
  }  // namespace

  std::string format_spec(AnySpec const& spec) {
    std::ostringstream out;
    switch (kind_of(spec)) {
      case SpecKind::morphic:
        write_morphic(out, std::get<MorphicSpec>(spec));
        break;
      case SpecKind::zigzag:
        out << print_shorthand(std::get<ZigzagSpec>(spec)) << '\n';
        break;
      case SpecKind::multilinear: {
        auto const& m = std::get<MultilinearSpec>(spec);
        if (!m.prefix().empty()) {
          out << "prefix " << m.prefix() << '\n';
        }
        for (auto const& term : m.terms()) {
          out << "term " << term.base << ' ' << term.slope << ' '
              << term.offset << '\n';
        }
        break;
      }
      case SpecKind::periodic: {
        auto const& p = std::get<PeriodicSpec>(spec);
        if (!p.prefix().empty()) {
          out << "prefix " << p.prefix() << '\n';
        }
        out << "period " << p.period() << '\n';
        break;
      }
    }
    return out.str();
  }

}  // namespace morphic

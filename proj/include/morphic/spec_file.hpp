// Text file formats for the four representations.
//
// morphic (one directive per line, '#' starts a comment, letters are
// whitespace-separated tokens):
//
//   start <letter>
//   rule <letter> -> <letter>*      (nothing after "->" means the empty image)
//   code <letter> -> <letter>       (unlisted letters are coded to themselves)
//
// zigzag:       a single line holding a shorthand expression.
// multilinear:  optional "prefix <string>", then "term <r> <a> <b>" lines.
// periodic:     optional "prefix <string>", then "period <string>".
//
// Letter tokens are one character of [a-zA-Z0-9], or <glyph>_<digits> for
// letters created by the conversions. Strings in the multilinear and periodic
// formats are runs of single-character letters.

#ifndef MORPHIC_SPEC_FILE_HPP_
#define MORPHIC_SPEC_FILE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "morphic/errors.hpp"
#include "morphic/verify.hpp"

namespace morphic {

  enum class SpecKind { morphic, zigzag, multilinear, periodic };

  std::string_view           to_string(SpecKind kind) noexcept;
  std::optional<SpecKind>    parse_kind(std::string_view name) noexcept;
  SpecKind                   kind_of(AnySpec const& spec) noexcept;

  //! A malformed spec file; line() is 1-based, 0 when not tied to a line.
  class SpecFileError : public Error {
   public:
    SpecFileError(std::string const& source,
                  std::size_t        line,
                  std::string const& message);

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  //! A morphic file without a "start" line.
  class MissingStartLetter : public Error {
   public:
    using Error::Error;
  };

  struct SpecFile {
    SpecKind    kind;
    AnySpec     body;
    std::string source;
  };

  //! Parses \p text. The kind is sniffed from the first directive unless
  //! given. Throws SpecFileError or MissingStartLetter.
  SpecFile parse_spec_file(std::string_view        text,
                           std::string const&      source = "<input>",
                           std::optional<SpecKind> kind   = std::nullopt);

  //! Reads and parses \p path. Known extensions (.morphic, .zigzag,
  //! .multilinear, .periodic) fix the kind; otherwise it is sniffed.
  SpecFile load_spec_file(std::string const&      path,
                          std::optional<SpecKind> kind = std::nullopt);

  //! Canonical text of a spec, newline-terminated.
  std::string format_spec(AnySpec const& spec);

}  // namespace morphic

#endif  // MORPHIC_SPEC_FILE_HPP_

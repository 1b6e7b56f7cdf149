// The `morphic` command line: analyze, expand, convert and equal.
//
// Exit codes: 0 success, 1 the words differ, 2 parse error, 3 precondition
// violation, 4 internal verification failure.

#ifndef MORPHIC_CLI_HPP_
#define MORPHIC_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morphic/spec_file.hpp"

namespace morphic::cli {

  enum ExitCode : int {
    success       = 0,
    different     = 1,
    parse_error   = 2,
    precondition  = 3,
    internal      = 4,
  };

  //! Rank table, prolongability, normalization power and growth verdict.
  int cmd_analyze(SpecFile const& file, std::ostream& out, std::ostream& err);

  //! The first n letters followed by a newline (nothing at all for n = 0).
  int cmd_expand(SpecFile const& file, std::size_t n, std::ostream& out,
                 std::ostream& err);

  //! Converts to \p target, checks the first verify_n letters of source and
  //! result agree and prints the result in its file format.
  int cmd_convert(SpecFile const& file, SpecKind target, std::size_t verify_n,
                  std::ostream& out, std::ostream& err);

  int cmd_equal(SpecFile const& a, SpecFile const& b, std::size_t n,
                std::ostream& out, std::ostream& err);

  //! Converts between any two kinds, going through zigzag where needed.
  AnySpec convert(AnySpec const& source, SpecKind target);

  //! Parses \p args (without the program name) and runs the subcommand.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace morphic::cli

#endif  // MORPHIC_CLI_HPP_

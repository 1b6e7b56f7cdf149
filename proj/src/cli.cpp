#include "morphic/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "morphic/analysis.hpp"
#include "morphic/errors.hpp"
#include "morphic/transforms.hpp"
#include "morphic/verify.hpp"

namespace morphic::cli {

  namespace {
    constexpr std::size_t kGrowthHorizon = 64;

    std::string show(std::optional<std::size_t> const& x) {
      return x ? std::to_string(*x) : std::string("-");
    }

    ZigzagSpec to_zigzag(AnySpec const& source) {
      struct Visitor {
        ZigzagSpec operator()(MorphicSpec const& s) const {
          return morphic_to_zigzag(s);
        }
        ZigzagSpec operator()(ZigzagSpec const& s) const {
          return s;
        }
        ZigzagSpec operator()(MultilinearSpec const& s) const {
          return multilinear_to_zigzag(s);
        }
        ZigzagSpec operator()(PeriodicSpec const& s) const {
          return periodic_to_zigzag(s);
        }
      };
      return std::visit(Visitor{}, source);
    }

    // Reports an error on err and returns the matching exit code.
    int report(std::exception const& e, std::ostream& err) {
      err << "error: " << e.what() << '\n';
      if (dynamic_cast<SpecFileError const*>(&e) != nullptr
          || dynamic_cast<ParseError const*>(&e) != nullptr) {
        return parse_error;
      }
      if (dynamic_cast<InternalConstructionError const*>(&e) != nullptr) {
        return internal;
      }
      if (dynamic_cast<Error const*>(&e) != nullptr) {
        return precondition;
      }
      return internal;
    }
  }  // namespace

  AnySpec convert(AnySpec const& source, SpecKind target) {
    if (kind_of(source) == target) {
      return source;
    }
    auto const zigzag = to_zigzag(source);
    switch (target) {
      case SpecKind::morphic:
        return zigzag_to_morphic(zigzag);
      case SpecKind::zigzag:
        return zigzag;
      case SpecKind::multilinear:
        return zigzag_to_multilinear(zigzag);
      case SpecKind::periodic:
        return zigzag_to_periodic(zigzag);
    }
    throw InvalidArgument("unknown target kind");
  }

  int cmd_analyze(SpecFile const& file, std::ostream& out, std::ostream& err) {
    if (file.kind != SpecKind::morphic) {
      err << "error: analyze needs a morphic spec, " << file.source
          << " is " << to_string(file.kind) << '\n';
      return precondition;
    }
    try {
      auto const& spec  = std::get<MorphicSpec>(file.body);
      auto const& h     = spec.morphism();
      auto const  table = rank_table(h);

      out << "letter  mortal  recursive  rank  level\n";
      for (Letter a : h.domain()) {
        auto const& e = table[a];
        out << std::left << std::setw(8) << a.name() << std::setw(8)
            << (e.mortal ? "yes" : "no") << std::setw(11)
            << (e.recursive ? "yes" : "no") << std::setw(6) << show(e.rank)
            << show(e.level) << '\n';
      }
      out << "start " << spec.start() << ": prolongable "
          << (is_prolongable(h, spec.start()) ? "yes" : "no") << '\n';
      try {
        auto const g = normalize(h);
        out << "normalization power: " << g.t << '\n';
      } catch (NormalizationNotFound const& e) {
        out << "normalization power: not found (" << e.what() << ")\n";
      }
      auto const growth
          = growth_report(h, Str{spec.start()}, kGrowthHorizon);
      out << "growth of " << spec.start() << ": " << growth.describe() << '\n';
      return success;
    } catch (std::exception const& e) {
      return report(e, err);
    }
  }

  int cmd_expand(SpecFile const& file, std::size_t n, std::ostream& out,
                 std::ostream& err) {
    try {
      if (n == 0) {
        return success;
      }
      out << prefix_of(file.body, n) << '\n';
      return success;
    } catch (std::exception const& e) {
      return report(e, err);
    }
  }

  int cmd_convert(SpecFile const& file, SpecKind target, std::size_t verify_n,
                  std::ostream& out, std::ostream& err) {
    AnySpec result = file.body;
    try {
      result = convert(file.body, target);
    } catch (ExponentialGrowth const& e) {
      err << "error: " << e.what() << '\n';
      return precondition;
    } catch (std::exception const& e) {
      return report(e, err);
    }
    try {
      auto const cmp = prefix_equal(file.body, result, verify_n);
      if (!cmp) {
        err << "error: verification failed: the converted word differs at "
            << "index " << *cmp.mismatch << " (" << *cmp.left << " vs "
            << *cmp.right << ")\n";
        return internal;
      }
    } catch (std::exception const& e) {
      err << "error: verification failed: " << e.what() << '\n';
      return internal;
    }
    out << format_spec(result);
    return success;
  }

  int cmd_equal(SpecFile const& a, SpecFile const& b, std::size_t n,
                std::ostream& out, std::ostream& err) {
    try {
      auto const cmp = prefix_equal(a.body, b.body, n);
      if (cmp) {
        out << "equal on the first " << n << " letters\n";
        return success;
      }
      out << "differ at index " << *cmp.mismatch << ": " << *cmp.left
          << " vs " << *cmp.right << '\n';
      return different;
    } catch (std::exception const& e) {
      return report(e, err);
    }
  }

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Morphic and zigzag words: analysis, expansion, conversion",
                 "morphic"};
    app.require_subcommand(1);

    std::string               kind_name;
    std::map<std::string, SpecKind> kinds;
    for (auto k : {SpecKind::morphic, SpecKind::zigzag, SpecKind::multilinear,
                   SpecKind::periodic}) {
      kinds.emplace(std::string(to_string(k)), k);
    }
    auto kind_check = CLI::IsMember(kinds);

    std::string path, other;
    std::size_t n        = 0;
    std::size_t verify_n = 1000;
    std::string target_name;

    auto* analyze = app.add_subcommand("analyze", "Rank table and growth of a morphic spec");
    analyze->add_option("file", path, "Spec file")->required();

    auto* expand = app.add_subcommand("expand", "Print the first n letters");
    expand->add_option("file", path, "Spec file")->required();
    expand->add_option("-n", n, "Number of letters")->required();

    auto* conv = app.add_subcommand("convert", "Convert to another representation");
    conv->add_option("file", path, "Spec file")->required();
    conv->add_option("--to", target_name, "Target kind")
        ->required()
        ->check(kind_check);
    conv->add_option("--verify", verify_n, "Prefix length checked after converting");

    auto* equal = app.add_subcommand("equal", "Compare two words on a prefix");
    equal->add_option("a", path, "First spec file")->required();
    equal->add_option("b", other, "Second spec file")->required();
    equal->add_option("-n", n, "Prefix length")->required();

    for (auto* sub : {analyze, expand, conv, equal}) {
      sub->add_option("--kind", kind_name, "Kind of the input files")
          ->check(kind_check);
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      auto const used = app.get_subcommands();
      out << (used.empty() ? app.help() : used.front()->help());
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return parse_error;
    }

    std::optional<SpecKind> kind;
    if (!kind_name.empty()) {
      kind = kinds.at(kind_name);
    }
    try {
      auto const file = load_spec_file(path, kind);
      if (analyze->parsed()) {
        return cmd_analyze(file, out, err);
      }
      if (expand->parsed()) {
        return cmd_expand(file, n, out, err);
      }
      if (conv->parsed()) {
        return cmd_convert(file, kinds.at(target_name), verify_n, out, err);
      }
      auto const second = load_spec_file(other, kind);
      return cmd_equal(file, second, n, out, err);
    } catch (MissingStartLetter const& e) {
      err << "error: " << e.what() << '\n';
      return precondition;
    } catch (std::exception const& e) {
      return report(e, err);
    }
  }

}  // namespace morphic::cli

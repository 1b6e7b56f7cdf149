// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "morphic/analysis.hpp"
#include "morphic/cli.hpp"
#include "morphic/errors.hpp"
#include "morphic/transforms.hpp"
#include "morphic/verify.hpp"
#include "morphic/zigzag.hpp"
#include "support/corpus.hpp"

using namespace morphic;
using namespace morphic::testing;

namespace {

  constexpr std::size_t kPrefix = 2000;

  struct Tally {
    std::size_t checked = 0;
    std::size_t failed  = 0;
    std::string first_failure;

    void expect(bool ok, std::string const& what) {
      ++checked;
      if (!ok && failed++ == 0) {
        first_failure = what;
      }
    }
    bool ok() const {
      return failed == 0 && checked > 0;
    }
  };

  std::string describe(ZigzagSpec const& z) {
    return print_shorthand(z);
  }

  // Plain h^n(x) by repeated letter-wise substitution.
  Str power_of(Morphism const& h, Str x, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      Str next;
      for (Letter a : x) {
        next += h.image(a);
      }
      x = std::move(next);
    }
    return x;
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto path = std::filesystem::temp_directory_path()
                / ("morphic_acceptance_" + name);
    std::ofstream(path) << text;
    return path.string();
  }

  MorphicSpec exponential_example() {
    return MorphicSpec(morph({{'c', "cbaa"}, {'a', "aa"}, {'b', "b"}}),
                       L('c'), Coding({{L('c'), L('a')}}));
  }

  Tally criterion1() {
    Tally t;
    auto  check = [&](std::string const& text, std::size_t n,
                     std::string const& want) {
      auto got = expand(parse_shorthand(text), n).to_string();
      t.expect(got == want, text + " gave " + got);
    };
    check("a:bc", 7, "abcbcbc");
    check("a(b)", 9, "ababbabbb");
    check("F(a(b))B(c(d))", 32, "abcdababbcddcdababbabbbcdddcddcd");
    check("B(a(b))", 30, "ababbababbbabbababbbbabbbabbab");
    auto got = prefix_of(exponential_example(), 11).to_string();
    t.expect(got == "abaabaaaaba", "morphic example gave " + got);
    MultilinearSpec m(Str(), {{str("a"), 1, 1}, {str("b"), 0, 1}});
    got = prefix_of(m, 9).to_string();
    t.expect(got == "abaabaaab", "multilinear example gave " + got);
    return t;
  }

  Tally criterion2(std::vector<ZigzagSpec> const& corpus,
                   std::vector<MorphicSpec>&     morphic) {
    Tally t;
    for (auto const& z : corpus) {
      auto m = zigzag_to_morphic(z);
      t.expect(prefix_of(m, kPrefix).to_string() == naive_expand(z, kPrefix),
               describe(z) + ": prefix differs");
      auto rank = rank_table(m.morphism()).rank(m.start());
      t.expect(rank == depth(z.list), describe(z) + ": rank differs from depth");
      morphic.push_back(std::move(m));
    }
    return t;
  }

  Tally criterion3(std::vector<ZigzagSpec> const&  corpus,
                   std::vector<MorphicSpec> const& morphic) {
    Tally t;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto const& z = corpus[i];
      try {
        auto back = morphic_to_zigzag(morphic[i]);
        t.expect(depth(back.list) == depth(z.list),
                 describe(z) + ": depth changed to " + describe(back));
        t.expect(naive_expand(back, kPrefix) == naive_expand(z, kPrefix),
                 describe(z) + ": prefix differs from " + describe(back));
      } catch (Error const& e) {
        t.expect(false, describe(z) + ": " + e.what());
      }
    }
    return t;
  }

  Tally criterion4(std::vector<ZigzagSpec> const& corpus) {
    Tally t;
    for (auto const& z : corpus) {
      if (depth(z.list) != 1) {
        continue;
      }
      auto p    = zigzag_to_periodic(z);
      auto back = periodic_to_zigzag(p);
      auto want = naive_expand(z, kPrefix);
      t.expect(prefix_of(p, kPrefix).to_string() == want,
               describe(z) + ": periodic prefix differs");
      t.expect(naive_expand(back, kPrefix) == want,
               describe(z) + ": round trip differs");
    }
    bool rejected = false;
    try {
      (void) morphic_to_zigzag(exponential_example());
    } catch (ExponentialGrowth const&) {
      rejected = true;
    }
    t.expect(rejected, "exponential example was not rejected");

    auto path = temp_file("exp.morphic",
                          "start c\nrule c -> c b a a\nrule a -> a a\n"
                          "rule b -> b\ncode c -> a\n");
    std::ostringstream out, err;
    int code = cli::run({"convert", path, "--to", "zigzag"}, out, err);
    t.expect(code == 3 && err.str().find("exponential growth") != std::string::npos,
             "convert exit code " + std::to_string(code));
    std::filesystem::remove(path);
    return t;
  }

  Tally criterion5(std::vector<ZigzagSpec> const& corpus) {
    Tally t;
    for (auto const& z : corpus) {
      if (depth(z.list) != 2) {
        continue;
      }
      auto m    = zigzag_to_multilinear(z);
      auto back = multilinear_to_zigzag(m);
      auto want = naive_expand(z, kPrefix);
      t.expect(prefix_of(m, kPrefix).to_string() == want,
               describe(z) + ": multilinear prefix differs");
      t.expect(naive_expand(back, kPrefix) == want,
               describe(z) + ": round trip differs");
    }
    MultilinearSpec m(Str(), {{str("a"), 1, 1}, {str("b"), 0, 1}});
    auto            z = multilinear_to_zigzag(m);
    t.expect(naive_expand(z, 9) == "abaabaaab",
             "multilinear example gave " + naive_expand(z, 9));
    return t;
  }

  Tally criterion6(std::vector<Morphism> const& morphisms) {
    Tally t;
    for (auto const& h : morphisms) {
      auto const table = rank_table(h);
      for (Letter a : h.domain()) {
        std::string where = std::string(a.name()) + " in";
        for (auto const& [x, img] : h.rules()) {
          where += " " + std::string(x.name()) + "->" + img.to_string();
        }
        t.expect(is_bounded(h, a) == brute_bounded(h, a),
                 where + ": boundedness disagrees");
        auto report = growth_report(h, Str{a}, 64);
        if (auto rank = table.rank(a)) {
          t.expect(report.verdict == GrowthReport::Verdict::degree
                       && report.degree == rank,
                   where + ": rank " + std::to_string(*rank) + " but "
                       + report.describe());
        } else {
          t.expect(report.verdict != GrowthReport::Verdict::degree,
                   where + ": unranked but " + report.describe());
        }
      }
    }
    return t;
  }

  Tally criterion7(std::vector<ZigzagSpec> const&  corpus,
                   std::vector<MorphicSpec> const& morphic,
                   std::vector<Morphism> const&    morphisms) {
    Tally t;
    for (auto const& z : corpus) {
      auto lm = list_to_morphism(z.list);
      auto l  = naive(z.list);
      for (std::size_t n = 0; n <= 8; ++n) {
        t.expect(lm.coding(power_of(lm.morphism, lm.seed, n)).to_string()
                     == naive_block(l, n + 1),
                 describe(z) + ": seed identity fails at n = "
                     + std::to_string(n));
      }
    }
    // build_list on the start tails of every polynomially bounded start.
    auto check_build = [&](Morphism const& h, Letter c, std::string const& what) {
      auto const g = normalize(restrict_to_reachable(h, Str{c}));
      auto const x = g.g.image(c).substr(1);
      auto const v = level_of(g.ranks, x);
      if (!v || *v == 0) {
        return;
      }
      auto const l = build_list(g, x, *v);
      for (std::size_t i = 1; i <= 8; ++i) {
        t.expect(block(l, i) == power_of(g.g, x, *v + i),
                 what + ": block " + std::to_string(i) + " differs");
      }
    };
    for (std::size_t i = 0; i < morphic.size(); ++i) {
      check_build(morphic[i].morphism(), morphic[i].start(), describe(corpus[i]));
    }
    for (auto const& h : morphisms) {
      auto const table = rank_table(h);
      for (Letter c : h.domain()) {
        if (is_prolongable(h, c) && table.rank(c)) {
          check_build(h, c, "random morphism at " + std::string(c.name()));
        }
      }
    }
    return t;
  }

  Tally criterion8(std::vector<ZigzagSpec> const&  corpus,
                   std::vector<MorphicSpec> const& morphic) {
    Tally t;
    for (std::size_t i = 0; i < morphic.size(); ++i) {
      auto const& m      = morphic[i];
      auto const  report = growth_report(m.morphism(), Str{m.start()}, 64);
      t.expect(report.verdict == GrowthReport::Verdict::degree,
               describe(corpus[i]) + ": " + report.describe());
    }
    return t;
  }

}  // namespace

int main() {
  auto const corpus    = zigzag_corpus();
  auto const morphisms = morphism_corpus();
  std::vector<MorphicSpec> morphic;

  std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
      {"example words", [&] { return criterion1(); }},
      {"zigzag to morphic", [&] { return criterion2(corpus, morphic); }},
      {"morphic to zigzag", [&] { return criterion3(corpus, morphic); }},
      {"ultimately periodic", [&] { return criterion4(corpus); }},
      {"multilinear", [&] { return criterion5(corpus); }},
      {"rank and boundedness oracles", [&] { return criterion6(morphisms); }},
      {"construction identities", [&] { return criterion7(corpus, morphic, morphisms); }},
      {"decisive growth degree", [&] { return criterion8(corpus, morphic); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      t = criteria[i].second();
    } catch (std::exception const& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first
              << "): " << (t.ok() ? "PASS" : "FAIL") << " [" << t.checked - t.failed
              << "/" << t.checked << " checks]";
    if (!t.ok()) {
      ++failures;
      std::cout << " first failure: " << t.first_failure;
    }
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}

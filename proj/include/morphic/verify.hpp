// Independent oracles: prefix expansion of every representation, prefix
// comparison, brute-force boundedness and empirical growth degrees.

#ifndef MORPHIC_VERIFY_HPP_
#define MORPHIC_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morphic/letter.hpp"
#include "morphic/morphism.hpp"
#include "morphic/transforms.hpp"
#include "morphic/zigzag.hpp"

namespace morphic {

  using AnySpec
      = std::variant<MorphicSpec, ZigzagSpec, MultilinearSpec, PeriodicSpec>;

  //! First n letters of tau(c x h(x) h^2(x) ...).
  Str prefix_of(MorphicSpec const& spec, std::size_t n);
  Str prefix_of(ZigzagSpec const& spec, std::size_t n);
  Str prefix_of(MultilinearSpec const& spec, std::size_t n);
  Str prefix_of(PeriodicSpec const& spec, std::size_t n);
  Str prefix_of(AnySpec const& spec, std::size_t n);

  struct PrefixComparison {
    bool equal = true;
    //! 1-based index of the first differing letter.
    std::optional<std::size_t> mismatch;
    std::optional<Letter>      left;
    std::optional<Letter>      right;

    explicit operator bool() const noexcept {
      return equal;
    }
  };

  PrefixComparison prefix_equal(AnySpec const& a, AnySpec const& b,
                                std::size_t n);

  //! |A| * maxImage^|A| + 1.
  std::size_t default_brute_cap(Morphism const& h);

  //! Iterates h^n(c) until a string repeats (true) or a length exceeds cap
  //! (false).
  bool brute_bounded(Morphism const& h, Letter c, std::size_t cap);
  bool brute_bounded(Morphism const& h, Letter c);

  struct GrowthOptions {
    double      epsilon       = 0.05;
    std::size_t stable_pairs  = 3;
    double      band          = 8.0;
    //! Stride of the per-step ratio test; absorbs periodic plateaus.
    std::size_t ratio_stride  = 8;
  };

  struct GrowthReport {
    enum class Verdict { degree, exponential, inconclusive };

    std::vector<boost::multiprecision::cpp_int> lengths;  // n = 0..N
    Verdict                                     verdict = Verdict::inconclusive;
    std::optional<std::size_t>                  degree;
    std::pair<std::size_t, std::size_t>         witness{0, 0};

    [[nodiscard]] std::string describe() const;
  };

  //! Exact lengths |h^n(x)| for n <= N and an empirical Theta-degree.
  //!
  //! Works on the running sums S(n) = |x| + |h(x)| + ... + |h^n(x)|, which
  //! smooth out periodic length patterns. The estimates are
  //! log2(S(2n) / S(n)) - 1, sharpened by two Richardson steps, for
  //! N/8 <= n <= N/4. A verdict "degree k" needs the last `stable_pairs`
  //! estimates to round to k, S(n) / n^(k+1) to stay within a factor `band`
  //! on [N/2, N], the estimates never to spread by a whole unit across the
  //! window, and k below the number of reachable letters. "exponential"
  //! needs the per-step ratio of S to stay at least 1 + epsilon on the upper
  //! half together with a superpolynomial escape of the estimate.
  //! Throws EmptyString; N must be at least 16.
  GrowthReport growth_report(Morphism const& h, Str const& x, std::size_t N,
                             GrowthOptions const& options = {});

}  // namespace morphic

#endif  // MORPHIC_VERIFY_HPP_

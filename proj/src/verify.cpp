#include "morphic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "morphic/analysis.hpp"
#include "morphic/errors.hpp"

namespace morphic {

  using boost::multiprecision::cpp_int;

  ////////////////////////////////////////////////////////////////////////
  // Prefixes
  ////////////////////////////////////////////////////////////////////////

  Str prefix_of(MorphicSpec const& spec, std::size_t n) {
    auto const& h   = spec.morphism();
    auto const& tau = spec.coding();
    Str         out{tau(spec.start())};
    Str         piece = spec.tail();
    // When h never erases, the first m letters of h(y) only depend on the
    // first m letters of y, so each piece can be cut down to what is needed.
    bool const non_erasing = std::none_of(
        h.domain().begin(), h.domain().end(),
        [&](Letter a) { return h.image(a).empty(); });
    while (out.size() < n) {
      if (non_erasing) {
        piece.truncate(n - out.size());
      }
      out += tau(piece);
      piece = apply(h, piece);
    }
    out.truncate(n);
    return out;
  }

  Str prefix_of(ZigzagSpec const& spec, std::size_t n) {
    return expand(spec, n);
  }

  Str prefix_of(MultilinearSpec const& spec, std::size_t n) {
    Str out = spec.prefix();
    for (std::size_t k = 0; out.size() < n; ++k) {
      out += spec.block(k);
    }
    out.truncate(n);
    return out;
  }

  Str prefix_of(PeriodicSpec const& spec, std::size_t n) {
    Str out = spec.prefix();
    while (out.size() < n) {
      out += spec.period();
    }
    out.truncate(n);
    return out;
  }

  Str prefix_of(AnySpec const& spec, std::size_t n) {
    return std::visit([n](auto const& s) { return prefix_of(s, n); }, spec);
  }

  PrefixComparison prefix_equal(AnySpec const& a,
                                AnySpec const& b,
                                std::size_t    n) {
    auto const left  = prefix_of(a, n);
    auto const right = prefix_of(b, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (left[i] != right[i]) {
        return PrefixComparison{false, i + 1, left[i], right[i]};
      }
    }
    return PrefixComparison{};
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundedness by brute force
  ////////////////////////////////////////////////////////////////////////

  std::size_t default_brute_cap(Morphism const& h) {
    constexpr auto kMax      = std::numeric_limits<std::size_t>::max();
    std::size_t    max_image = 0;
    for (Letter a : h.domain()) {
      max_image = std::max(max_image, h.image(a).size());
    }
    std::size_t bound = h.size();
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (max_image != 0 && bound > kMax / max_image) {
        return kMax;
      }
      bound *= max_image;
    }
    return bound == kMax ? kMax : bound + 1;
  }

  bool brute_bounded(Morphism const& h, Letter c, std::size_t cap) {
    std::set<Str> seen;
    Str           current{c};
    while (true) {
      if (current.size() > cap) {
        return false;
      }
      if (!seen.insert(current).second) {
        return true;
      }
      current = apply(h, current);
    }
  }

  bool brute_bounded(Morphism const& h, Letter c) {
    return brute_bounded(h, c, default_brute_cap(h));
  }

  ////////////////////////////////////////////////////////////////////////
  // Growth
  ////////////////////////////////////////////////////////////////////////

  std::string GrowthReport::describe() const {
    switch (verdict) {
      case Verdict::degree:
        return "degree " + std::to_string(*degree);
      case Verdict::exponential:
        return "exponential";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
  }

  namespace {
    long double to_real(cpp_int const& x) {
      return x.convert_to<long double>();
    }
  }  // namespace

  GrowthReport growth_report(Morphism const&      h,
                             Str const&           x,
                             std::size_t          N,
                             GrowthOptions const& options) {
    if (x.empty()) {
      throw EmptyString("growth_report needs a nonempty string");
    }
    if (N < 16) {
      throw InvalidArgument("growth_report needs N >= 16");
    }
    auto const reach = restrict_to_reachable(h, x);

    // per-letter lengths |h^n(a)|, updated in place
    std::vector<cpp_int> letter_len(reach.size(), 1);
    GrowthReport         report;
    report.lengths.reserve(N + 1);
    auto total = [&] {
      cpp_int sum = 0;
      for (Letter a : x) {
        sum += letter_len[reach.index_of(a)];
      }
      return sum;
    };
    report.lengths.push_back(total());
    for (std::size_t n = 1; n <= N; ++n) {
      std::vector<cpp_int> next(reach.size(), 0);
      for (std::size_t i = 0; i < reach.size(); ++i) {
        for (Letter b : reach.image_at(i)) {
          next[i] += letter_len[reach.index_of(b)];
        }
      }
      letter_len = std::move(next);
      report.lengths.push_back(total());
    }

    auto const& len  = report.lengths;
    auto const  low     = N / 8;
    auto const  quarter = N / 4;
    auto const  half    = N / 2;
    report.witness      = {low, N};

    if (len[half] == 0) {
      // mortal: constant (zero) from here on
      report.verdict = GrowthReport::Verdict::degree;
      report.degree  = 0;
      return report;
    }

    // Lengths may oscillate with a period (a -> d, d -> bcc, b -> a, c -> λ
    // gives 1, 1, 3, 1, 1, 3, ...). The running sums
    // S(n) = len(0) + ... + len(n) are Theta(n^(k+1)) exactly when the lengths
    // are Theta(n^k), and they are monotone, so every test runs on S.
    std::vector<long double> sum(N + 1);
    cpp_int                  running = 0;
    for (std::size_t n = 0; n <= N; ++n) {
      running += len[n];
      sum[n] = to_real(running);
    }

    // e(n) = log2(S(2n) / S(n)) - 1 tends to k with an error expanding in
    // powers of 1/n. Two Richardson steps remove the 1/n and 1/n^2 terms,
    // which matter when a small leading coefficient sits on top of large
    // lower-order terms.
    auto raw = [&](std::size_t n) {
      return std::log2(sum[2 * n] / sum[n]) - 1.0L;
    };
    auto first = [&](std::size_t n) { return 2.0L * raw(2 * n) - raw(n); };
    std::vector<long double> doubling;  // indexed by n - low
    for (std::size_t n = low; n <= quarter; ++n) {
      doubling.push_back((4.0L * first(n) - first(n / 2)) / 3.0L);
    }
    auto const last      = doubling.back();
    auto const estimate  = std::llround(last);
    auto const [lo, hi]  = std::minmax_element(doubling.begin(), doubling.end());
    auto const spread    = *hi - *lo;
    auto const max_degree
        = static_cast<long double>(reach.size() == 0 ? 0 : reach.size() - 1);

    bool stable = estimate >= 0 && doubling.size() >= options.stable_pairs;
    for (std::size_t k = 0; stable && k < options.stable_pairs; ++k) {
      stable = std::llround(doubling[doubling.size() - 1 - k]) == estimate;
    }

    bool in_band = false;
    if (stable) {
      long double band_lo = std::numeric_limits<long double>::max();
      long double band_hi = 0;
      for (std::size_t n = half; n <= N; ++n) {
        auto r  = sum[n] / std::pow(static_cast<long double>(n),
                                    static_cast<long double>(estimate + 1));
        band_lo = std::min(band_lo, r);
        band_hi = std::max(band_hi, r);
      }
      in_band = band_lo > 0 && band_hi / band_lo <= options.band;
    }

    if (stable && in_band && spread < 1.0L
        && static_cast<long double>(estimate) <= max_degree) {
      report.verdict = GrowthReport::Verdict::degree;
      report.degree  = static_cast<std::size_t>(estimate);
      return report;
    }

    bool persistent = true;
    auto stride     = std::max<std::size_t>(1, options.ratio_stride);
    for (std::size_t n = half; persistent && n + stride <= N; ++n) {
      auto ratio = std::pow(sum[n + stride] / sum[n],
                            1.0L / static_cast<long double>(stride));
      persistent = ratio >= 1.0L + options.epsilon;
    }
    bool const escapes = last > max_degree + 0.5L || spread >= 1.0L;
    report.verdict     = persistent && escapes
                             ? GrowthReport::Verdict::exponential
                             : GrowthReport::Verdict::inconclusive;
    return report;
  }

}  // namespace morphic

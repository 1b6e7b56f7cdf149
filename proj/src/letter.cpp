#include "morphic/letter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "morphic/errors.hpp"

namespace morphic {

  namespace {
    class SymbolTable {
     public:
      std::uint32_t intern(std::string_view name) {
        {
          std::shared_lock lock(_mutex);
          if (auto it = _ids.find(std::string(name)); it != _ids.end()) {
            return it->second;
          }
        }
        std::unique_lock lock(_mutex);
        auto [it, inserted] = _ids.try_emplace(
            std::string(name), static_cast<std::uint32_t>(_names.size()));
        if (inserted) {
          _names.emplace_back(name);
        }
        return it->second;
      }

      std::string_view name(std::uint32_t id) const {
        std::shared_lock lock(_mutex);
        // deque never relocates existing elements
        return _names.at(id);
      }

     private:
      mutable std::shared_mutex                       _mutex;
      std::deque<std::string>                         _names;
      std::unordered_map<std::string, std::uint32_t> _ids;
    };

    SymbolTable& symbols() {
      static SymbolTable table;
      return table;
    }
  }  // namespace

  Letter Letter::named(std::string_view name) {
    if (name.empty()) {
      throw InvalidArgument("letter names must be nonempty");
    }
    for (char ch : name) {
      auto u = static_cast<unsigned char>(ch);
      if (!std::isgraph(u)) {
        throw InvalidArgument("letter name contains a non-printable or blank "
                              "character: \""
                              + std::string(name) + "\"");
      }
    }
    return Letter(symbols().intern(name));
  }

  std::string_view Letter::name() const {
    return symbols().name(_id);
  }

  std::ostream& operator<<(std::ostream& os, Letter a) {
    return os << a.name();
  }

  Str Str::from_chars(std::string_view text) {
    Str result;
    result.reserve(text.size());
    for (char ch : text) {
      result.push_back(Letter::of(ch));
    }
    return result;
  }

  Letter Str::nth(std::size_t i) const {
    if (i == 0 || i > _letters.size()) {
      throw std::out_of_range("Str::nth: index " + std::to_string(i)
                              + " outside 1.." + std::to_string(size()));
    }
    return _letters[i - 1];
  }

  Str Str::substr(std::size_t pos, std::size_t len) const {
    if (pos >= size()) {
      return Str();
    }
    auto last = pos + std::min(len, size() - pos);
    return Str(_letters.begin() + pos, _letters.begin() + last);
  }

  bool Str::contains(Letter a) const {
    return std::find(begin(), end(), a) != end();
  }

  std::size_t Str::count(Letter a) const {
    return static_cast<std::size_t>(std::count(begin(), end(), a));
  }

  bool Str::starts_with(Str const& prefix) const {
    return prefix.size() <= size()
           && std::equal(prefix.begin(), prefix.end(), begin());
  }

  LetterSet Str::alphabet() const {
    return LetterSet(begin(), end());
  }

  std::string Str::to_string() const {
    std::string out;
    out.reserve(size());
    for (Letter a : _letters) {
      out += a.name();
    }
    return out;
  }

  Str power(Str const& x, std::size_t k) {
    Str result;
    result.reserve(x.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      result += x;
    }
    return result;
  }

  std::ostream& operator<<(std::ostream& os, Str const& x) {
    return os << x.to_string();
  }

}  // namespace morphic

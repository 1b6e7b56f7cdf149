// Letters and finite strings over them.

#ifndef MORPHIC_LETTER_HPP_
#define MORPHIC_LETTER_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace morphic {

  //! An interned symbol.
  //!
  //! Letters are identified by a process-wide id handed out by a symbol table,
  //! so comparing and hashing them is as cheap as comparing integers. The
  //! textual name is usually a single character; letters synthesised by the
  //! conversions are named `<glyph>_<counter>`. The symbol table is only ever
  //! appended to and is safe to use from several threads.
  //!
  //! Ordering is by id (interning order), which is not alphabetical. Anything
  //! user-visible should order by name() or by construction order instead.
  class Letter {
   public:
    Letter() = delete;

    //! Interns \p name. Names must be nonempty and contain only printable,
    //! non-blank characters; otherwise InvalidArgument is thrown.
    static Letter named(std::string_view name);

    //! Shorthand for single-character names.
    static Letter of(char glyph) {
      return named(std::string_view(&glyph, 1));
    }

    [[nodiscard]] std::uint32_t id() const noexcept {
      return _id;
    }
    [[nodiscard]] std::string_view name() const;

    //! The display character, i.e. the first character of the name.
    [[nodiscard]] char glyph() const {
      return name().front();
    }

    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(Letter, Letter) = default;

   private:
    explicit Letter(std::uint32_t id) noexcept : _id(id) {}
    std::uint32_t _id;
  };

  std::ostream& operator<<(std::ostream& os, Letter a);

  using LetterSet = std::set<Letter>;

  //! A finite string of letters. The empty string plays the role of lambda.
  //!
  //! The container interface (operator[], begin/end) is 0-based like any other
  //! C++ container; nth() offers the 1-based indexing used in diagnostics.
  class Str {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Str() = default;
    explicit Str(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Str(std::initializer_list<Letter> letters) : _letters(letters) {}
    template <typename It>
    Str(It first, It last) : _letters(first, last) {}

    //! Every character of \p text becomes one single-character letter.
    static Str from_chars(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    //! 1-based access; throws std::out_of_range.
    [[nodiscard]] Letter nth(std::size_t i) const;
    [[nodiscard]] Letter front() const {
      return _letters.front();
    }
    [[nodiscard]] Letter back() const {
      return _letters.back();
    }

    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Letter a) {
      _letters.push_back(a);
    }
    Str& append(Str const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
      return *this;
    }
    Str& operator+=(Str const& other) {
      return append(other);
    }
    void reserve(std::size_t n) {
      _letters.reserve(n);
    }
    void truncate(std::size_t n) {
      if (n < _letters.size()) {
        _letters.erase(_letters.begin() + static_cast<std::ptrdiff_t>(n), _letters.end());
      }
    }

    //! Letters [pos, pos + len) using 0-based positions, clamped to size().
    [[nodiscard]] Str substr(std::size_t pos,
                             std::size_t len = static_cast<std::size_t>(-1))
        const;

    [[nodiscard]] bool contains(Letter a) const;
    [[nodiscard]] std::size_t count(Letter a) const;
    [[nodiscard]] bool starts_with(Str const& prefix) const;

    //! alp(x): the set of letters occurring in the string.
    [[nodiscard]] LetterSet alphabet() const;

    //! Concatenated letter names; "" for the empty string.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Str const&, Str const&) = default;
    friend auto operator<=>(Str const&, Str const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  inline Str operator+(Str lhs, Str const& rhs) {
    lhs += rhs;
    return lhs;
  }

  //! x^k
  Str power(Str const& x, std::size_t k);

  std::ostream& operator<<(std::ostream& os, Str const& x);

}  // namespace morphic

template <>
struct std::hash<morphic::Letter> {
  std::size_t operator()(morphic::Letter a) const noexcept {
    return std::hash<std::uint32_t>{}(a.id());
  }
};

#endif  // MORPHIC_LETTER_HPP_

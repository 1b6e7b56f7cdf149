// Exception types thrown by the morphic library.
//
// Every error derives from morphic::Error so callers that only care about
// "something went wrong" can catch one type. The CLI maps the concrete types
// onto its exit-code contract.

#ifndef MORPHIC_ERRORS_HPP_
#define MORPHIC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphic {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A letter was used with a morphism whose domain does not contain it.
  class UnknownLetter : public Error {
   public:
    using Error::Error;
  };

  //! An operation that is only defined on nonempty strings got the empty one.
  class EmptyString : public Error {
   public:
    using Error::Error;
  };

  //! A value violates the invariants of its type (bad morphism, bad list...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  class NormalizationNotFound : public Error {
   public:
    using Error::Error;
  };

  class PreconditionViolation : public Error {
   public:
    using Error::Error;
  };

  //! The start letter of a morphic representation has no rank.
  class ExponentialGrowth : public PreconditionViolation {
   public:
    using PreconditionViolation::PreconditionViolation;
  };

  class DepthMismatch : public PreconditionViolation {
   public:
    using PreconditionViolation::PreconditionViolation;
  };

  //! A construction failed its own self-check. Always a bug, never bad input.
  class InternalConstructionError : public Error {
   public:
    using Error::Error;
  };

  //! Shorthand parse failure; `position` is a 0-based character offset.
  class ParseError : public Error {
   public:
    ParseError(std::size_t position, std::string const& expected)
        : Error("parse error at position " + std::to_string(position)
                + ": expected " + expected),
          _position(position),
          _expected(expected) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }
    [[nodiscard]] std::string const& expected() const noexcept {
      return _expected;
    }

   private:
    std::size_t _position;
    std::string _expected;
  };

}  // namespace morphic

#endif  // MORPHIC_ERRORS_HPP_

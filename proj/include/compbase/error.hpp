// compbase - unital groups with compression bases, checked exactly
//
// Exception types.  Every error raised by the library derives from
// compbase::Error; the CLI maps ParseError to exit code 2 and everything
// else to exit code 1 or 2 depending on where it surfaced.

#pragma once

#include <stdexcept>
#include <string>

namespace compbase {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Element or endomorphism does not fit the carrier it is used with.
  class ShapeError : public Error {
   public:
    ShapeError(std::string const& what,
               std::string const& expected,
               std::string const& actual)
        : Error(what + ": expected " + expected + ", got " + actual) {}
    explicit ShapeError(std::string const& what) : Error(what) {}
  };

  // A precondition on the mathematical input failed (element outside E,
  // focus not in P, incompatible pair passed to meet, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // The operation needs an exhaustively enumerable unit interval.
  class NotEnumerable : public Error {
   public:
    using Error::Error;
  };

  // Malformed model file or command-line element.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace compbase

#pragma once

#include <stdexcept>
#include <string>

namespace subsemi {

  // Every error raised by the library derives from this; the kind string is
  // a stable identifier the CLI surfaces in machine-readable output.
  class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string const& what)
        : std::runtime_error(kind + ": " + what), _kind(std::move(kind)) {}

    std::string const& kind() const noexcept {
      return _kind;
    }

   private:
    std::string _kind;
  };

#define SUBSEMI_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(std::string const& what) : Error(#Name, what) {}   \
  }

  SUBSEMI_DEFINE_ERROR(MalformedTable);
  SUBSEMI_DEFINE_ERROR(TooLarge);
  SUBSEMI_DEFINE_ERROR(NotAssociative);
  SUBSEMI_DEFINE_ERROR(NoRecurrence);
  SUBSEMI_DEFINE_ERROR(PreconditionFailed);
  SUBSEMI_DEFINE_ERROR(ExponentNotPowerOfTwoPlusOne);
  SUBSEMI_DEFINE_ERROR(EmptySeed);
  SUBSEMI_DEFINE_ERROR(OutOfRange);
  SUBSEMI_DEFINE_ERROR(OrderTooLargeForExhaustive);
  SUBSEMI_DEFINE_ERROR(NoSolution);
  SUBSEMI_DEFINE_ERROR(TheoremForbids);
  SUBSEMI_DEFINE_ERROR(NoOddPrimeFactor);
  SUBSEMI_DEFINE_ERROR(AlphabetMismatch);
  SUBSEMI_DEFINE_ERROR(OrderTooLarge);
  SUBSEMI_DEFINE_ERROR(ParseError);

#undef SUBSEMI_DEFINE_ERROR

}  // namespace subsemi

#pragma once

#include <stdexcept>
#include <string>

namespace bsconf {

  // Base of every domain error raised by the library. The CLI maps these to
  // exit code 1; UsageError maps to 2.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define BSCONF_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    explicit Name(std::string const& m)  \
        : Error(std::string(#Name ": ") + m) {} \
  }

  BSCONF_DEFINE_ERROR(DenominatorNotSupported);
  BSCONF_DEFINE_ERROR(BaseMismatch);
  BSCONF_DEFINE_ERROR(InvalidBase);
  BSCONF_DEFINE_ERROR(ParseError);
  BSCONF_DEFINE_ERROR(ShapeMismatch);
  BSCONF_DEFINE_ERROR(DepthExceeded);
  BSCONF_DEFINE_ERROR(BaseNotPrimePower);
  BSCONF_DEFINE_ERROR(SampleExhausted);
  BSCONF_DEFINE_ERROR(InconclusiveDepth);
  BSCONF_DEFINE_ERROR(BoundTooSmall);
  BSCONF_DEFINE_ERROR(InvalidN);
  BSCONF_DEFINE_ERROR(UnknownElement);
  BSCONF_DEFINE_ERROR(InvalidPair);
  BSCONF_DEFINE_ERROR(FactViolation);
  BSCONF_DEFINE_ERROR(UsageError);

#undef BSCONF_DEFINE_ERROR

}  // namespace bsconf

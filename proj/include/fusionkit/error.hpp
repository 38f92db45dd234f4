#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FUSIONKIT_DEFINE_ERROR(Name)            \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

FUSIONKIT_DEFINE_ERROR(OrderBoundExceeded);
FUSIONKIT_DEFINE_ERROR(SearchBoundExceeded);
FUSIONKIT_DEFINE_ERROR(DegreeMismatch);
FUSIONKIT_DEFINE_ERROR(NotASubgroup);
FUSIONKIT_DEFINE_ERROR(NotAPGroup);
FUSIONKIT_DEFINE_ERROR(NotNormal);
FUSIONKIT_DEFINE_ERROR(UnknownName);
FUSIONKIT_DEFINE_ERROR(ParseError);
FUSIONKIT_DEFINE_ERROR(FormatError);
FUSIONKIT_DEFINE_ERROR(NotStronglyClosed);
FUSIONKIT_DEFINE_ERROR(NoDecomposition);
// Raised when two independent computations of the same object disagree.
FUSIONKIT_DEFINE_ERROR(InternalError);

#undef FUSIONKIT_DEFINE_ERROR

}  // namespace fusionkit

#pragma once

#include <stdexcept>
#include <string>

namespace atoral {

/// Base of every error raised by the library. The CLI maps these to exit
/// code 2 (bad input / unmet precondition); anomalies are reported in
/// results, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ATORAL_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

ATORAL_DEFINE_ERROR(DimensionMismatch);
ATORAL_DEFINE_ERROR(EmptySet);
ATORAL_DEFINE_ERROR(AmbiguousRounding);
ATORAL_DEFINE_ERROR(ZeroPolynomial);
ATORAL_DEFINE_ERROR(NoCertificate);
ATORAL_DEFINE_ERROR(NoConvergence);
ATORAL_DEFINE_ERROR(DividesH);
ATORAL_DEFINE_ERROR(GridZero);
ATORAL_DEFINE_ERROR(TailTooFat);
ATORAL_DEFINE_ERROR(HTooSmall);
ATORAL_DEFINE_ERROR(NotDivisible);
ATORAL_DEFINE_ERROR(QuasiInverseRejected);
ATORAL_DEFINE_ERROR(BlowUpGuard);
ATORAL_DEFINE_ERROR(ParseError);

#undef ATORAL_DEFINE_ERROR

}  // namespace atoral

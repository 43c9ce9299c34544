#pragma once

#include <stdexcept>
#include <string>

namespace crossed {

/// Base class of every error raised by the library. `semantic()` separates
/// mathematical failures (exit code 1 in the CLI) from malformed input (exit 2).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what, bool semantic = true)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), semantic_(semantic) {}

  const std::string& kind() const noexcept { return kind_; }
  bool semantic() const noexcept { return semantic_; }

 private:
  std::string kind_;
  bool semantic_;
};

#define CROSSED_DEFINE_ERROR(Name, semantic_flag)                              \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name, what, semantic_flag) {} \
  };

CROSSED_DEFINE_ERROR(DivisionByZero, true)
CROSSED_DEFINE_ERROR(SingularMatrix, true)
CROSSED_DEFINE_ERROR(DimensionMismatch, true)
CROSSED_DEFINE_ERROR(NotAGroup, true)
CROSSED_DEFINE_ERROR(GradeMismatch, true)
CROSSED_DEFINE_ERROR(ShapeMismatch, true)
CROSSED_DEFINE_ERROR(NotConvolutionInvertible, true)
CROSSED_DEFINE_ERROR(NotHopfAutomorphism, true)
CROSSED_DEFINE_ERROR(NotHomomorphism, true)
CROSSED_DEFINE_ERROR(AntipodeNotInvertible, true)
CROSSED_DEFINE_ERROR(NotInvertible, true)
CROSSED_DEFINE_ERROR(GradingViolation, true)
CROSSED_DEFINE_ERROR(PreconditionFailed, true)
CROSSED_DEFINE_ERROR(UnsupportedCharacteristic, true)
CROSSED_DEFINE_ERROR(ValidationFailed, true)
CROSSED_DEFINE_ERROR(UnknownExample, false)
CROSSED_DEFINE_ERROR(ParseError, false)

#undef CROSSED_DEFINE_ERROR

}  // namespace crossed

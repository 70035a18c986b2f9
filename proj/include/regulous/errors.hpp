#pragma once

#include <stdexcept>
#include <string>

namespace regulous {

/// Base of every error thrown by the toolkit. `kind()` is a stable tag used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define REGULOUS_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(#Name, what) {}          \
  };

REGULOUS_DEFINE_ERROR(ZeroPolynomial)
REGULOUS_DEFINE_ERROR(DegenerateInput)
REGULOUS_DEFINE_ERROR(NonPositiveScalar)
REGULOUS_DEFINE_ERROR(NotHomogeneous)
REGULOUS_DEFINE_ERROR(ZeroDenominator)
REGULOUS_DEFINE_ERROR(DivisionByZeroFunction)
REGULOUS_DEFINE_ERROR(NoDerivative)
REGULOUS_DEFINE_ERROR(ZeroFunction)
REGULOUS_DEFINE_ERROR(IdenticallyUndefined)
REGULOUS_DEFINE_ERROR(PreconditionViolated)
REGULOUS_DEFINE_ERROR(StageBudgetExceeded)
REGULOUS_DEFINE_ERROR(NonIsolatedPole)
REGULOUS_DEFINE_ERROR(Unsupported)
REGULOUS_DEFINE_ERROR(BudgetExhausted)
REGULOUS_DEFINE_ERROR(FlatnessViolated)
REGULOUS_DEFINE_ERROR(WitnessInvalid)
REGULOUS_DEFINE_ERROR(NotOneBlowup)
REGULOUS_DEFINE_ERROR(NegativeValueDetected)
REGULOUS_DEFINE_ERROR(InfiniteZeroSet)
REGULOUS_DEFINE_ERROR(FormatError)

#undef REGULOUS_DEFINE_ERROR

/// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace regulous

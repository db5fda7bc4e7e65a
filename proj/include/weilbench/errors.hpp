#pragma once

#include <stdexcept>
#include <string>

namespace weilbench {

enum class Errc {
  NotPrime,
  DivisionByZero,
  CtxMismatch,
  NotASubfield,
  InvalidArgument,
  ParseError,
  NotDivisible,
  ArityMismatch,
  DimensionMismatch,
  DegenerateEta,
  BothConstantInVar,
  NonUnitConstantTerm,
  NotMonicInX,
  NormalizationFailed,
  BadInitialPoint,
  PreconditionViolated,
  InternalVerifyFailed,
  ZeroPolynomial,
  BudgetExceeded,
  NonIntegerSanity,
  DOutOfRange,
  BoundViolation,
  RegularityViolated,
  RetriesExhausted,
  NoSolution,
  NotStabilized,
  BirationalityFailed,
  OnDiscriminant,
  FitFailed,
  GenerationExhausted,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace weilbench

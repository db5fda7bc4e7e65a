#include "weilbench/errors.hpp"

namespace weilbench {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::NotASubfield: return "NotASubfield";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegenerateEta: return "DegenerateEta";
    case Errc::BothConstantInVar: return "BothConstantInVar";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::NotMonicInX: return "NotMonicInX";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::BadInitialPoint: return "BadInitialPoint";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InternalVerifyFailed: return "InternalVerifyFailed";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonIntegerSanity: return "NonIntegerSanity";
    case Errc::DOutOfRange: return "DOutOfRange";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::RegularityViolated: return "RegularityViolated";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::BirationalityFailed: return "BirationalityFailed";
    case Errc::OnDiscriminant: return "OnDiscriminant";
    case Errc::FitFailed: return "FitFailed";
    case Errc::GenerationExhausted: return "GenerationExhausted";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace weilbench

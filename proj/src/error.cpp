#include "regset/error.hpp"

namespace regset {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::PNotDividing: return "PNotDividing";
    case ErrorCode::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorCode::NotDoubleCosetUnion: return "NotDoubleCosetUnion";
    case ErrorCode::NotLeftCosetUnion: return "NotLeftCosetUnion";
    case ErrorCode::IntersectsH: return "IntersectsH";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::FrattiniCheckFailed: return "FrattiniCheckFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what,
             std::optional<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      witness_(witness) {}

}  // namespace regset

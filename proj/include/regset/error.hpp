#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace regset {

enum class ErrorCode {
  ClosureExceedsCap,
  InvalidPermutation,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  NotSubgroup,
  NotNormal,
  PNotDividing,
  OrderExceedsCap,
  NotDoubleCosetUnion,
  NotLeftCosetUnion,
  IntersectsH,
  NotInverseClosed,
  NotEquitable,
  SearchBudgetExceeded,
  PreconditionViolated,
  ConstructionFailed,
  FrattiniCheckFailed,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code.
// `witness` holds an element or vertex index when the failure has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> witness = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> witness_;
};

}  // namespace regset

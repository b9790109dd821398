#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flexalg {

enum class ErrorCode {
  ArityMismatch,
  RingMismatch,
  UnknownVariable,
  ParseError,
  NotSquare,
  NotSkewSymmetric,
  TermCapExceeded,
  NotInvariant,
  NotCertified,
  SymbolicTime,
  SymbolicCapture,
  NotFixed,
  NotIdentityToOrder,
  NotHomogeneous,
  DeterminantNotOne,
  FrozenCoincidence,
  NotSeparated,
  SignatureMismatch,
  UnsupportedStratum,
  DuplicatePoint,
  SeparationFailure,
  BudgetExhausted,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type. The code
// is stable and machine readable; `index` names the offending element when the
// failing input is one entry of a list (a point, a matrix pair, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace flexalg

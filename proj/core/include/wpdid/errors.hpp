#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wpdid {

enum class Errc {
  InvalidArgument,
  TooFewSensors,
  DuplicatePosition,
  InvalidPair,
  IncommensurableDistances,
  DomainError,
  NotAmbiguous,
  SearchSpaceTooLarge,
  GridTooLarge,
  LengthMismatch,
  BudgetExceeded,
  ZeroMagnitude,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to diagnostics.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wpdid

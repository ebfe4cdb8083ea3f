#include "wpdid/errors.hpp"

namespace wpdid {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::TooFewSensors: return "TooFewSensors";
    case Errc::DuplicatePosition: return "DuplicatePosition";
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::IncommensurableDistances: return "IncommensurableDistances";
    case Errc::DomainError: return "DomainError";
    case Errc::NotAmbiguous: return "NotAmbiguous";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::GridTooLarge: return "GridTooLarge";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ZeroMagnitude: return "ZeroMagnitude";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace wpdid

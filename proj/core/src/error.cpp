#include "lclc/error.hpp"

namespace lclc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::AllZero: return "AllZero";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::BadTolerance: return "BadTolerance";
    case Errc::BadLambda: return "BadLambda";
    case Errc::OutOfSupport: return "OutOfSupport";
    case Errc::DomainError: return "DomainError";
    case Errc::NoCrossing: return "NoCrossing";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::MeanMismatch: return "MeanMismatch";
    case Errc::DiracInput: return "DiracInput";
    case Errc::NoBracket: return "NoBracket";
    case Errc::NotMonotoneLogConcave: return "NotMonotoneLogConcave";
    case Errc::Unclassified: return "Unclassified";
    case Errc::BadOrders: return "BadOrders";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace lclc

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lclc {

enum class Errc {
  AllZero,
  NegativeWeight,
  BadTolerance,
  BadLambda,
  OutOfSupport,
  DomainError,
  NoCrossing,
  NotSymmetric,
  MeanMismatch,
  DiracInput,
  NoBracket,
  NotMonotoneLogConcave,
  Unclassified,
  BadOrders,
  BadInput,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lclc

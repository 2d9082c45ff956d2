#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chevlab {

enum class ErrorCode {
  MixedRings,
  UnsupportedIdealShape,
  InfiniteRing,
  InvalidRingSpec,
  ParseError,
  Overflow,
  NotARoot,
  OppositeRoots,
  NoDecomposition,
  ExtractionFailure,
  NormalizationImpossible,
  UnrepresentableQuotient,
  CaseMismatch,
  SignMismatch,
  NotShortRoot,
  ResidueFieldF2,
  UnitDecompositionFailed,
  BoundExceeded,
  UnsupportedType,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the enumeration engine; carries the element count reached
// before the bound was hit.
class BoundExceededError : public Error {
 public:
  BoundExceededError(const std::string& what, std::size_t partial)
      : Error(ErrorCode::BoundExceeded, what), partial_(partial) {}

  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace chevlab

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permcomp {

enum class Errc {
  InvalidPermutation,
  DuplicateValues,
  ArityMismatch,
  EmptyBlock,
  ParseError,
  InvalidGraph,
  OrderTooLarge,
  IndexOutOfRange,
  PreconditionViolated,
  HasInducedP3,
  NotAPath,
  NotAStar,
  NotA123Path,
  KOutOfRange,
  LabelingFailed,
  DuplicatePoint,
  InvalidPoint,
  ScaleExceeded,
  UnsupportedM,
  BelowThreshold,
  InternalInvariant,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library. `code()` identifies the condition;
/// `what()` carries a human-readable message including the offending input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace permcomp

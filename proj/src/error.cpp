#include "permcomp/error.hpp"

namespace permcomp {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::DuplicateValues: return "DuplicateValues";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::HasInducedP3: return "HasInducedP3";
    case Errc::NotAPath: return "NotAPath";
    case Errc::NotAStar: return "NotAStar";
    case Errc::NotA123Path: return "NotA123Path";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::LabelingFailed: return "LabelingFailed";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::UnsupportedM: return "UnsupportedM";
    case Errc::BelowThreshold: return "BelowThreshold";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace permcomp

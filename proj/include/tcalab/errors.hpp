#pragma once

#include <stdexcept>
#include <string>

namespace tcalab {

enum class Errc {
  InvalidInput,
  SizeMismatch,
  BasisMismatch,
  ZeroClass,
  InvalidD,
  Unstable,
  InsufficientShape,
  VertexMissing,
  TruncationTooSmall,
  VertexSetMismatch,
  NotAComplex,
  ZeroMap,
  NotHS,
  InvariantViolation,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::ZeroClass: return "ZeroClass";
    case Errc::InvalidD: return "InvalidD";
    case Errc::Unstable: return "Unstable";
    case Errc::InsufficientShape: return "InsufficientShape";
    case Errc::VertexMissing: return "VertexMissing";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::VertexSetMismatch: return "VertexSetMismatch";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::ZeroMap: return "ZeroMap";
    case Errc::NotHS: return "NotHS";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tcalab

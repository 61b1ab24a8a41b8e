#pragma once

#include <stdexcept>
#include <string>

namespace qcoh {

// Every failure mode in the library maps to one of these kinds so callers
// (and tests) can dispatch on the reason without parsing messages.
enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  Overflow,
  DimensionMismatch,
  NotUnitTrace,
  NotPositive,
  NotUnitary,
  NotDistribution,
  NotBipartite,
  BadPhaseCount,
  BadParameter,
  BadRange,
  UnknownPreset,
  UnknownSuite,
  UnsupportedDimension,
  UnsupportedOperation,
  ParseError,
  InvalidState,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotDistribution: return "NotDistribution";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::BadPhaseCount: return "BadPhaseCount";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::UnsupportedOperation: return "UnsupportedOperation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidState: return "InvalidState";
  }
  return "UnknownError";
}

}  // namespace qcoh

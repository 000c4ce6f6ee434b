#pragma once

#include <stdexcept>
#include <string>

namespace fundseq {

enum class ErrorKind {
  DimensionMismatch,
  NotWellDefined,
  NotAComplex,
  UnsupportedRing,
  WrongShape,
  NotExact,
  HypothesisViolated,
  SchemaError,
  UnknownSuite,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace fundseq

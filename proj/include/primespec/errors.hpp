#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace primespec {

enum class ErrorKind {
  KindMismatch,
  Unsupported,
  UnsupportedSymbolic,
  UnsupportedMap,
  NonEnumerable,
  FactorizationLimit,
  BadSlot,
  BadArity,
  WildPrimeUnsupported,
  NotFound,
  TooManyVars,
  SpectrumTooLarge,
  InvalidInput,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnsupportedSymbolic: return "UnsupportedSymbolic";
    case ErrorKind::UnsupportedMap: return "UnsupportedMap";
    case ErrorKind::NonEnumerable: return "NonEnumerable";
    case ErrorKind::FactorizationLimit: return "FactorizationLimit";
    case ErrorKind::BadSlot: return "BadSlot";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::WildPrimeUnsupported: return "WildPrimeUnsupported";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::TooManyVars: return "TooManyVars";
    case ErrorKind::SpectrumTooLarge: return "SpectrumTooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace primespec

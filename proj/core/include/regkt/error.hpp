#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regkt {

enum class ErrorKind {
  CapExceeded,
  NotNormal,
  NotMember,
  UnmappedGenerator,
  NotPerfect,
  NotFull,
  NotHomomorphism,
  InfiniteKernel,
  NotFinite,
  InvalidGroup,
  ParseError,
  Unsupported,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; callers
// switch on kind() when they need to distinguish them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::UnmappedGenerator: return "UnmappedGenerator";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::InfiniteKernel: return "InfiniteKernel";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace regkt

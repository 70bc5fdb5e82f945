#pragma once

#include <stdexcept>
#include <string>

namespace symtop {

/// Domain error codes surfaced on the CLI as "error: <name>: <message>".
enum class Errc {
  NotInCatalog,
  CapExceeded,
  ZeroDirection,
  NotClosed,
  NotPrimitive,
  RingMismatch,
  ZeroClass,
  Unsupported,
  NotApplicable,
  ParseError,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotInCatalog: return "NotInCatalog";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ZeroClass: return "ZeroClass";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw DomainError(code, msg);
}

}  // namespace symtop

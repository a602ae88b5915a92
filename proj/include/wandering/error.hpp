#pragma once

#include <stdexcept>
#include <string>

namespace wandering {

enum class ErrorKind {
  DegenerateInput,
  BracketFailure,
  NotFound,
  NotReached,
  PreconditionViolated,
  EmptySet,
  OutsideFrame,
  Usage,
  Io,
};

constexpr const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotReached: return "NotReached";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::OutsideFrame: return "OutsideFrame";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (CLI, Python) can map it to an exit status or exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace wandering

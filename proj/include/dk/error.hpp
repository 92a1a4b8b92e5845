#pragma once

#include <stdexcept>
#include <string>

namespace dk {

/// Classified failure reasons; the CLI maps these to exit codes.
enum class ErrorKind {
  Validation,            // bad sizes, bad indices, malformed input
  CapExceeded,           // an enumeration or memory cap was hit
  StabilizationNotReached
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string what)
      : std::runtime_error(std::move(what)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorKind::Validation, msg);
}
[[noreturn]] inline void fail_cap(const std::string& msg) {
  throw Error(ErrorKind::CapExceeded, msg);
}

}  // namespace dk

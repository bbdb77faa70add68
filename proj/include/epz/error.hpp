#pragma once

#include <stdexcept>
#include <string>

namespace epz {

// Failure classes. The numeric values double as C API status codes and CLI
// exit codes.
enum class ErrorKind : int {
  InvalidArgument = 1,
  Parse = 2,
  Domain = 3,
  Resource = 4,
  Verification = 5,
};

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

} // namespace epz

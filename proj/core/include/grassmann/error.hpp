#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

enum class ErrorKind {
  kInvalidInput,   // caller broke a precondition
  kResourceBound,  // a configured size bound would be exceeded
  kInternal,       // an arithmetic or structural invariant failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidInput, what);
}

[[noreturn]] inline void throw_bound(const std::string& what) {
  throw Error(ErrorKind::kResourceBound, what);
}

[[noreturn]] inline void throw_internal(const std::string& what) {
  throw Error(ErrorKind::kInternal, what);
}

}  // namespace grassmann

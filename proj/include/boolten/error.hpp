#pragma once

#include <stdexcept>
#include <string>

namespace boolten {

enum class ErrorKind {
  invalid_argument,  // malformed construction input
  shape_mismatch,    // operands not conformable
  parse,             // tensor file could not be decoded
  resource,          // exhaustive search cap exceeded
  hypothesis,        // weighted MP hypotheses violated
  not_regular,       // operation requires a regular tensor
  internal,          // a checked identity failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace boolten

#pragma once

#include <stdexcept>
#include <string>

namespace animst {

enum class ErrorKind {
  usage,        // bad command-line arguments or unknown names
  validation,   // malformed or inconsistent input data
  io,           // missing or unreadable artifact files
  computation,  // a numeric routine failed (e.g. eigen non-convergence)
  contract,     // API misuse, e.g. querying an unregistered vertex
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace animst

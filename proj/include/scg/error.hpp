// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace scg {

enum class ErrorKind {
  InvalidArgument,
  OutOfRange,
  Precondition,
  Capacity,
  Numeric,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the toolkit. The kind drives the C API
/// status code and the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace scg

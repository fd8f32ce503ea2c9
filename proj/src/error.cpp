// SPDX-License-Identifier: Apache-2.0

#include "scg/error.hpp"

namespace scg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::Numeric: return "numeric failure";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace scg

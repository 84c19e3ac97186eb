#pragma once

#include <stdexcept>
#include <string>

namespace becurv {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Graph construction / validation failures.
struct DuplicateEdge : Error { using Error::Error; };
struct NonPositiveWeight : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

/// Malformed input text; `line` is 1-based (byte offset for JSON input).
struct ParseError : Error {
  long line;
  ParseError(const std::string& what, long line_no)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Argument outside a function's domain (bad index, invalid parameter range).
struct DomainError : Error { using Error::Error; };

// Numeric kernel failures.
struct NoBracket : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// Curvature is undefined at a vertex without neighbours.
struct DegenerateVertex : Error { using Error::Error; };

// Requested closed form does not exist.
struct Unsupported : Error { using Error::Error; };

}  // namespace becurv

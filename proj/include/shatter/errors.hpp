#pragma once

#include <stdexcept>
#include <string>

namespace shatter {

/// Malformed input text. `position` is a byte offset into the input when known.
struct SyntaxError : std::runtime_error {
  explicit SyntaxError(const std::string& msg, long long pos = -1)
      : std::runtime_error(msg), position(pos) {}
  long long position;
};

/// Structurally well-formed input that violates a type invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidEps : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroTotalWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace shatter

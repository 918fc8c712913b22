#pragma once

#include <stdexcept>
#include <string>

namespace synchro {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range state or letter, duplicate symbol, bad table shape.
class invalid_input : public error {
 public:
  using error::error;
};

/// Well-formed input that violates an operation's documented precondition
/// (bordered word where an unbordered one is required, non-synchronizing
/// automaton passed to is_proper, ...).
class precondition_error : public error {
 public:
  using error::error;
};

/// An exponential search was refused because the automaton is larger than
/// the configured state cap. Distinct from a negative answer.
class resource_limit : public error {
 public:
  using error::error;
};

/// Input outside the supported class (e.g. strong synchronization without zero).
class unsupported_input : public error {
 public:
  using error::error;
};

/// Broken internal invariant. Never expected to fire.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace synchro

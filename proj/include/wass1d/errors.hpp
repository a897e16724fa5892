#pragma once

#include <stdexcept>
#include <string>

namespace wass1d {

enum class Errc {
  ExteriorJump,
  IncompatibleFunctions,
  NotAShock,
  NotDecreasing,
  MissingLambda,
  NoWaveSpeed,
  CflViolation,
  MassMismatch,
  FarStateMismatch,
  NoConvergence,
  InsufficientWindow,
  TailTooSharp,
  IncompatibleCoefficients,
  DegenerateError,
  EmptyTable,
  WindowTooSmall,
  InvalidConfig,
};

const char* to_string(Errc c);

/// Error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace wass1d

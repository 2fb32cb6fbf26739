#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: unknown vertex, wrong arity, nonpositive size, ...
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined on this input (e.g. max degree of the empty graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds the size guard of an exponential algorithm.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A required property of an input (usually decomposition validity) is missing.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A step of an operation script could not be applied.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Malformed .gr / .td / script text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Internal inconsistency: something a proof guarantees did not happen.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace widthlab

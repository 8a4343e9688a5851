#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsef2 {

// Exit codes shared by the CLI and the error hierarchy below.
enum class ExitCode : int {
  kOk = 0,          // feasible / verified
  kRefuted = 1,     // infeasible / refuted
  kInputError = 2,  // malformed input, bad configuration, witness errors
  kResource = 3,    // enumeration or memory cap exceeded, generation gave up
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept { return ExitCode::kInputError; }
};

// Dimension mismatch, out-of-range parameter, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parsed object violates a type invariant.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// A reduction configuration fails its parameter validator.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// A claimed witness does not satisfy the instance it is attached to.
class WitnessError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kResource; }
};

// Randomized construction exhausted its retry budget.
class GenerationError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace sparsef2

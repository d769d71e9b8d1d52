#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace footfix {

/// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a declared contract (shape, range, configuration).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class LayoutError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
 public:
  ConfigError(std::string field, const std::string& what)
      : ValidationError(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class EmptyInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GenerationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ModelStateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Degenerate rotation input (zero or parallel 6D columns).
class SingularInputError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values or divergence during numeric work.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed file. `offset()` is the byte position of the first bad field.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::uint64_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

}  // namespace footfix

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlat {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from different monoid instances, or a payload does not
/// belong to the instance it was handed to.
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

/// The instance lacks a capability needed by the requested operation.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an element, monomial or algebra literal.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qlat

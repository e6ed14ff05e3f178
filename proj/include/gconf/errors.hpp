#pragma once

#include <stdexcept>
#include <string>

namespace gconf {

/// Base class of every error raised by the library; `kind()` is the
/// machine-readable category reported by the command line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed or inconsistent input (mismatched vertex counts, bad shapes, d*d != 0, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input", message) {}
};

/// A configurable size guard was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message) : Error("resource", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

class SplittingError : public Error {
 public:
  explicit SplittingError(const std::string& message) : Error("splitting", message) {}
};

}  // namespace gconf

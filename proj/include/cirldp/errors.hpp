#pragma once

#include <stdexcept>
#include <string>

namespace cirldp {

/// Base for every error raised by the library. `kind()` is the stable,
/// machine-readable tag used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Parameters outside a > 2, b < 0, x0 > 0.
class RegimeError : public Error {
 public:
  explicit RegimeError(const std::string& what) : Error("RegimeError", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

class GridError : public Error {
 public:
  explicit GridError(const std::string& what) : Error("GridError", what) {}
};

// V_T too close to zero to divide by.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what)
      : Error("DegenerateError", what) {}
};

// Gradient requested on a domain boundary or on the branch switching surface.
class BoundaryError : public Error {
 public:
  explicit BoundaryError(const std::string& what)
      : Error("BoundaryError", what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error("OverflowError", what) {}
};

// Too few tail hits for a probability estimate.
class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(const std::string& what)
      : Error("InconclusiveError", what) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("ConfigError", what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace cirldp

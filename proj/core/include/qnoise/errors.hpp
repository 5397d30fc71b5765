#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnoise {

/// A numeric argument outside the domain of the operation (negative jitter,
/// efficiency outside (0, 1], non-positive frequency, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse that is not a numeric domain problem: mismatched grids,
/// too few samples, an empty band.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid run configuration. Carries the offending key and, when the error
/// came from parsing text, the 1-based line number (0 otherwise).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::size_t line, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

}  // namespace qnoise

namespace qnoise {

/// A sweep point failed; index() is its position in the value list.
class SweepPointError : public DomainError {
 public:
  SweepPointError(std::size_t index, const std::string& message)
      : DomainError(message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace qnoise

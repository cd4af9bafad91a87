#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpf {

/// Precondition violated by an argument (bad parameter, mismatched grids, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced or met a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time integration produced non-finite values.
class BlowUpError : public NumericError {
 public:
  BlowUpError(const std::string& what, std::size_t step)
      : NumericError(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Picard iteration failed to contract.
class NonContractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A convergence study produced results that cannot be interpreted.
class DiagnosticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed binary snapshot.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Missing or invalid configuration entry; `key` is "section.key".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(key) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace gpf

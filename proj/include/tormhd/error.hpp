#pragma once

#include <stdexcept>
#include <string>

namespace tormhd {

// Precondition violations raise std::invalid_argument. The types below mark
// failures that the command-line front end maps onto distinct exit codes.

/// Schema or value error in a configuration document; carries the key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key_path, const std::string& message)
      : std::runtime_error(key_path.empty() ? message : key_path + ": " + message),
        key_path_(std::move(key_path)) {}

  const std::string& key_path() const noexcept { return key_path_; }

 private:
  std::string key_path_;
};

/// Filesystem failure, always reported with the offending path.
class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A snapshot whose magic, version, size or checksum does not verify.
class CorruptSnapshotError : public IoError {
 public:
  using IoError::IoError;
};

/// Raised by the stepper when a non-finite coefficient appears.
class DivergedError : public std::runtime_error {
 public:
  DivergedError(double time, const std::string& message)
      : std::runtime_error(message), time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace tormhd

#pragma once

#include <stdexcept>
#include <string>

namespace mgslab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The characteristic equation has no root in the searched unstable range.
class NoUnstableEigenvalue : public Error {
public:
  using Error::Error;
};

/// Doubling the continued-fraction depth moved the eigenvalue too much.
class TruncationNotConverged : public Error {
public:
  using Error::Error;
};

/// Configuration parse or validation failure. `path` names the offending key
/// (dotted, e.g. "params.gamma").
class ConfigError : public Error {
public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

} // namespace mgslab

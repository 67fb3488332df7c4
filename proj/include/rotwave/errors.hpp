#pragma once

#include <stdexcept>
#include <string>

namespace rotwave {

/// Malformed or inconsistent run configuration. `line` is the 1-based line
/// number in the config file when known, 0 otherwise.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Potential fails the positivity / slope / smallness gate.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonfinite state detected during time integration.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double t, const std::string& msg)
      : std::runtime_error(msg + " at t = " + std::to_string(t)), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rotwave

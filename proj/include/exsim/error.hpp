#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exsim {

/// Argument outside the validity domain of a thermodynamic relation
/// (temperature below the dead state, outside a polynomial range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base for failures raised while a component model is being advanced.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Battery power demand beyond what the pack can deliver or absorb.
class PowerLimitError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// State of charge driven outside [0, 1].
class ChargeLimitError : public ModelError {
 public:
  using ModelError::ModelError;
};

class NumericError : public ModelError {
 public:
  using ModelError::ModelError;
};

class CalibrationError : public ModelError {
 public:
  using ModelError::ModelError;
};

class DispatchError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Invalid or inconsistent configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// File missing, unreadable or unwritable.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simulation aborted at a given step.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(std::size_t step, const std::string& cause)
      : std::runtime_error("step " + std::to_string(step) + ": " + cause), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace exsim
